#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mvmodal/rational.hpp"

namespace mvmodal {

enum class ChainKind { MVn, LukRational, GodelRational, ProductRational, ProductOneGen };

enum class BinOp { Meet, Join, Fuse, Impl };

/// Element k/n of the finite Lukasiewicz chain MV_n.
struct MvIndex {
  std::uint64_t k = 0;
  friend bool operator==(const MvIndex&, const MvIndex&) = default;
};

/// Element of a one-generated product chain: 0, or a^exp (exp = 0 meaning 1).
/// Stored symbolically by exponent; a^i with i in the millions stays O(1).
struct OneGenElem {
  bool bottom = false;
  BigInt exp = 0;
  friend bool operator==(const OneGenElem& a, const OneGenElem& b) {
    if (a.bottom != b.bottom) return false;
    return a.bottom || a.exp == b.exp;
  }
};

using AlgebraElement = std::variant<Rational, MvIndex, OneGenElem>;

bool operator==(const AlgebraElement& a, const AlgebraElement& b);

/// A linearly ordered FL_ew chain with exact operations. Immutable; all
/// operations are pure.
class ChainAlgebra {
public:
  static ChainAlgebra mv(std::uint64_t n);  // n >= 1
  static ChainAlgebra luk();
  static ChainAlgebra godel();
  static ChainAlgebra product();
  static ChainAlgebra product_one_gen(const Rational& a);  // 0 < a < 1

  /// Parses "mv:<n>", "luk", "godel", "product", "product1:<p>/<q>".
  static ChainAlgebra parse_descriptor(const std::string& text);
  std::string descriptor() const;

  ChainKind kind() const { return kind_; }
  std::uint64_t mv_order() const { return n_; }
  const Rational& generator() const { return generator_; }

  AlgebraElement zero() const;
  AlgebraElement one() const;

  bool in_carrier(const AlgebraElement& a) const;
  /// Throws CarrierMismatch unless a belongs to this chain's carrier.
  void require_carrier(const AlgebraElement& a) const;

  /// Total order of the chain: negative, zero, positive.
  int compare(const AlgebraElement& a, const AlgebraElement& b) const;
  bool leq(const AlgebraElement& a, const AlgebraElement& b) const { return compare(a, b) <= 0; }
  bool is_one(const AlgebraElement& a) const;
  bool is_zero(const AlgebraElement& a) const;

  AlgebraElement meet(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement join(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement fuse(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement impl(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement apply(BinOp op, const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement neg(const AlgebraElement& a) const;  // a -> 0
  AlgebraElement delta(const AlgebraElement& a) const;

  /// m-fold fusion in closed form; m may be astronomically large.
  /// a^0 = 1 even for a = 0.
  AlgebraElement power(const AlgebraElement& a, const BigInt& m) const;

  bool is_n_contractive(std::uint64_t n) const;
  bool is_weakly_archimedean() const;

  /// An element alpha with alpha^{m+1} < alpha^m; deterministic choice.
  /// Throws NoSuchElement when the chain is m-contractive.
  AlgebraElement pick_noncontractive_element(const BigInt& m) const;

  /// Element syntax: rational chains take "p/q" or "p"; MV_n additionally
  /// requires the denominator to divide n; one-generated chains take
  /// "0", "1" or "g^<i>".
  AlgebraElement parse_element(const std::string& text) const;
  std::string element_to_string(const AlgebraElement& a) const;

  /// All elements in ascending order. Finite chains only (MV_n).
  std::vector<AlgebraElement> enumerate_carrier() const;

private:
  ChainKind kind_;
  std::uint64_t n_ = 0;       // MV_n order
  Rational generator_ = 0;    // one-generated product chains

  const MvIndex& as_mv(const AlgebraElement& a) const;
  const Rational& as_rational(const AlgebraElement& a) const;
  const OneGenElem& as_onegen(const AlgebraElement& a) const;
};

}  // namespace mvmodal
