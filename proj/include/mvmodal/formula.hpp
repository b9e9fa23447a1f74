#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mvmodal/rational.hpp"

namespace mvmodal {

enum class FKind { Zero, One, Var, Meet, Join, Fuse, Impl, Box, Diamond, Delta, Power };

class FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

/// Immutable modal formula tree. The parser eliminates the derived
/// connectives (~phi becomes phi -> 0, phi <-> psi becomes the fusion of the
/// two implications), so downstream code only sees these eleven node kinds.
class FormulaNode {
public:
  FKind kind;
  std::string var;     // Var
  Formula lhs, rhs;    // binary nodes; unary nodes use lhs
  BigInt exponent;     // Power, >= 0

  FormulaNode(FKind k, std::string v, Formula l, Formula r, BigInt e)
      : kind(k), var(std::move(v)), lhs(std::move(l)), rhs(std::move(r)), exponent(std::move(e)) {}
};

namespace fm {
Formula zero();
Formula one();
Formula var(const std::string& name);  // [a-z][a-zA-Z0-9_]*
Formula meet(Formula l, Formula r);
Formula join(Formula l, Formula r);
Formula fuse(Formula l, Formula r);
Formula impl(Formula l, Formula r);
Formula box(Formula f);
Formula diamond(Formula f);
Formula delta(Formula f);
Formula power(Formula f, BigInt m);
Formula neg(Formula f);                       // f -> 0
Formula iff(Formula l, Formula r);            // (l -> r) & (r -> l)
Formula big_join(const std::vector<Formula>& fs);  // left fold; fs nonempty
Formula big_fuse(const std::vector<Formula>& fs);  // left fold; fs nonempty
}  // namespace fm

/// Structural total order; used for deterministic formula sets.
int compare(const Formula& a, const Formula& b);
bool equal(const Formula& a, const Formula& b);

struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const { return compare(a, b) < 0; }
};

using FormulaSet = std::set<Formula, FormulaLess>;

/// Propositional subformulas: modal subformulas are atomic (PSFm(M f) = {M f}),
/// Delta counts as a unary propositional connective, Power as a binary-like
/// node over its body.
FormulaSet psfm(const Formula& f);
FormulaSet psfm(const std::vector<Formula>& fs);

std::uint64_t modal_depth(const Formula& f);

/// Replaces every Box f by ~<>~f. Value-preserving exactly on involutive
/// chains (Lukasiewicz and MV_n); callers must guard accordingly.
Formula normalize_to_diamond(const Formula& f);

bool contains_delta(const Formula& f);
bool is_modality_free(const Formula& f);

/// Variable names occurring in f, sorted, unique.
std::vector<std::string> collect_variables(const Formula& f);

struct Sequent {
  std::vector<Formula> premises;
  Formula conclusion;
};

std::vector<std::string> collect_variables(const Sequent& s);

/// Parses the workbench grammar (precedence low to high: <->, ->, \/, /\, &,
/// unary {~ [] <> D}, ^NAT, atoms). Throws ParseError.
Formula parse_formula(const std::string& text);

/// Canonical rendering; parse_formula(print_formula(f)) is structurally f.
std::string print_formula(const Formula& f);

}  // namespace mvmodal
