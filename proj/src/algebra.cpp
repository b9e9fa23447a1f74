#include "mvmodal/algebra.hpp"

#include <algorithm>
#include <limits>

#include "mvmodal/errors.hpp"

namespace mvmodal {

namespace {

const Rational kZero = 0;
const Rational kOne = 1;

std::string kind_name(ChainKind k) {
  switch (k) {
    case ChainKind::MVn: return "mv";
    case ChainKind::LukRational: return "luk";
    case ChainKind::GodelRational: return "godel";
    case ChainKind::ProductRational: return "product";
    case ChainKind::ProductOneGen: return "product1";
  }
  return "?";
}

}  // namespace

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<Rational>(a))
    return std::get<Rational>(a) == std::get<Rational>(b);
  if (std::holds_alternative<MvIndex>(a))
    return std::get<MvIndex>(a) == std::get<MvIndex>(b);
  return std::get<OneGenElem>(a) == std::get<OneGenElem>(b);
}

ChainAlgebra ChainAlgebra::mv(std::uint64_t n) {
  if (n < 1) throw DomainError("MV_n requires n >= 1");
  ChainAlgebra a;
  a.kind_ = ChainKind::MVn;
  a.n_ = n;
  return a;
}

ChainAlgebra ChainAlgebra::luk() {
  ChainAlgebra a;
  a.kind_ = ChainKind::LukRational;
  return a;
}

ChainAlgebra ChainAlgebra::godel() {
  ChainAlgebra a;
  a.kind_ = ChainKind::GodelRational;
  return a;
}

ChainAlgebra ChainAlgebra::product() {
  ChainAlgebra a;
  a.kind_ = ChainKind::ProductRational;
  return a;
}

ChainAlgebra ChainAlgebra::product_one_gen(const Rational& gen) {
  if (!(gen > 0 && gen < 1))
    throw DomainError("one-generated product chain needs a generator strictly between 0 and 1");
  ChainAlgebra a;
  a.kind_ = ChainKind::ProductOneGen;
  a.generator_ = gen;
  return a;
}

ChainAlgebra ChainAlgebra::parse_descriptor(const std::string& text) {
  if (text == "luk") return luk();
  if (text == "godel") return godel();
  if (text == "product") return product();
  if (text.rfind("mv:", 0) == 0) {
    const std::string num = text.substr(3);
    try {
      BigInt n(num);
      if (n < 1 || n > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw DomainError("mv order out of range: " + text);
      return mv(static_cast<std::uint64_t>(n));
    } catch (const std::runtime_error&) {
      throw DomainError("malformed algebra descriptor: '" + text + "'");
    }
  }
  if (text.rfind("product1:", 0) == 0)
    return product_one_gen(parse_rational(text.substr(9)));
  throw DomainError("unknown algebra descriptor: '" + text +
                    "' (expected mv:<n>, luk, godel, product, product1:<p>/<q>)");
}

std::string ChainAlgebra::descriptor() const {
  switch (kind_) {
    case ChainKind::MVn: return "mv:" + std::to_string(n_);
    case ChainKind::ProductOneGen: return "product1:" + rational_to_string(generator_);
    default: return kind_name(kind_);
  }
}

AlgebraElement ChainAlgebra::zero() const {
  switch (kind_) {
    case ChainKind::MVn: return MvIndex{0};
    case ChainKind::ProductOneGen: return OneGenElem{true, 0};
    default: return kZero;
  }
}

AlgebraElement ChainAlgebra::one() const {
  switch (kind_) {
    case ChainKind::MVn: return MvIndex{n_};
    case ChainKind::ProductOneGen: return OneGenElem{false, 0};
    default: return kOne;
  }
}

bool ChainAlgebra::in_carrier(const AlgebraElement& a) const {
  switch (kind_) {
    case ChainKind::MVn:
      return std::holds_alternative<MvIndex>(a) && std::get<MvIndex>(a).k <= n_;
    case ChainKind::ProductOneGen:
      return std::holds_alternative<OneGenElem>(a) &&
             (std::get<OneGenElem>(a).bottom || std::get<OneGenElem>(a).exp >= 0);
    default:
      return std::holds_alternative<Rational>(a) && std::get<Rational>(a) >= 0 &&
             std::get<Rational>(a) <= 1;
  }
}

void ChainAlgebra::require_carrier(const AlgebraElement& a) const {
  if (!in_carrier(a))
    throw CarrierMismatch("element does not belong to the carrier of " + descriptor());
}

const MvIndex& ChainAlgebra::as_mv(const AlgebraElement& a) const {
  require_carrier(a);
  return std::get<MvIndex>(a);
}

const Rational& ChainAlgebra::as_rational(const AlgebraElement& a) const {
  require_carrier(a);
  return std::get<Rational>(a);
}

const OneGenElem& ChainAlgebra::as_onegen(const AlgebraElement& a) const {
  require_carrier(a);
  return std::get<OneGenElem>(a);
}

int ChainAlgebra::compare(const AlgebraElement& a, const AlgebraElement& b) const {
  switch (kind_) {
    case ChainKind::MVn: {
      const auto& x = as_mv(a);
      const auto& y = as_mv(b);
      return x.k < y.k ? -1 : (x.k == y.k ? 0 : 1);
    }
    case ChainKind::ProductOneGen: {
      const auto& x = as_onegen(a);
      const auto& y = as_onegen(b);
      if (x.bottom && y.bottom) return 0;
      if (x.bottom) return -1;
      if (y.bottom) return 1;
      // larger exponent = smaller element
      return x.exp > y.exp ? -1 : (x.exp == y.exp ? 0 : 1);
    }
    default: {
      const auto& x = as_rational(a);
      const auto& y = as_rational(b);
      return x < y ? -1 : (x == y ? 0 : 1);
    }
  }
}

bool ChainAlgebra::is_one(const AlgebraElement& a) const { return compare(a, one()) == 0; }
bool ChainAlgebra::is_zero(const AlgebraElement& a) const { return compare(a, zero()) == 0; }

AlgebraElement ChainAlgebra::meet(const AlgebraElement& a, const AlgebraElement& b) const {
  return compare(a, b) <= 0 ? a : b;
}

AlgebraElement ChainAlgebra::join(const AlgebraElement& a, const AlgebraElement& b) const {
  return compare(a, b) >= 0 ? a : b;
}

AlgebraElement ChainAlgebra::fuse(const AlgebraElement& a, const AlgebraElement& b) const {
  switch (kind_) {
    case ChainKind::LukRational: {
      Rational s = as_rational(a) + as_rational(b) - 1;
      return s > 0 ? AlgebraElement(s) : AlgebraElement(kZero);
    }
    case ChainKind::GodelRational:
      return meet(a, b);
    case ChainKind::ProductRational:
      return AlgebraElement(as_rational(a) * as_rational(b));
    case ChainKind::MVn: {
      const std::uint64_t x = as_mv(a).k;
      const std::uint64_t y = as_mv(b).k;
      return MvIndex{x + y > n_ ? x + y - n_ : 0};
    }
    case ChainKind::ProductOneGen: {
      const auto& x = as_onegen(a);
      const auto& y = as_onegen(b);
      if (x.bottom || y.bottom) return OneGenElem{true, 0};
      return OneGenElem{false, x.exp + y.exp};
    }
  }
  throw DomainError("unreachable");
}

AlgebraElement ChainAlgebra::impl(const AlgebraElement& a, const AlgebraElement& b) const {
  switch (kind_) {
    case ChainKind::LukRational: {
      Rational s = 1 - as_rational(a) + as_rational(b);
      return s < 1 ? AlgebraElement(s) : AlgebraElement(kOne);
    }
    case ChainKind::GodelRational:
      return as_rational(a) <= as_rational(b) ? AlgebraElement(kOne) : b;
    case ChainKind::ProductRational: {
      const Rational& x = as_rational(a);
      const Rational& y = as_rational(b);
      if (x <= y) return kOne;
      return AlgebraElement(y / x);  // x > y >= 0, so x > 0
    }
    case ChainKind::MVn: {
      const std::uint64_t x = as_mv(a).k;
      const std::uint64_t y = as_mv(b).k;
      const std::uint64_t s = n_ - x + y;
      return MvIndex{std::min(n_, s)};
    }
    case ChainKind::ProductOneGen: {
      const auto& x = as_onegen(a);
      const auto& y = as_onegen(b);
      if (compare(a, b) <= 0) return OneGenElem{false, 0};
      // now a > b, in particular a != 0
      if (y.bottom) return OneGenElem{true, 0};
      return OneGenElem{false, y.exp - x.exp};  // y.exp > x.exp here
    }
  }
  throw DomainError("unreachable");
}

AlgebraElement ChainAlgebra::apply(BinOp op, const AlgebraElement& a,
                                   const AlgebraElement& b) const {
  switch (op) {
    case BinOp::Meet: return meet(a, b);
    case BinOp::Join: return join(a, b);
    case BinOp::Fuse: return fuse(a, b);
    case BinOp::Impl: return impl(a, b);
  }
  throw DomainError("unreachable");
}

AlgebraElement ChainAlgebra::neg(const AlgebraElement& a) const { return impl(a, zero()); }

AlgebraElement ChainAlgebra::delta(const AlgebraElement& a) const {
  require_carrier(a);
  return is_one(a) ? one() : zero();
}

AlgebraElement ChainAlgebra::power(const AlgebraElement& a, const BigInt& m) const {
  if (m < 0) throw DomainError("power: negative exponent");
  require_carrier(a);
  if (m == 0) return one();
  switch (kind_) {
    case ChainKind::LukRational: {
      const Rational& x = std::get<Rational>(a);
      Rational s = 1 - Rational(m) * (1 - x);
      return s > 0 ? AlgebraElement(s) : AlgebraElement(kZero);
    }
    case ChainKind::MVn: {
      const std::uint64_t k = std::get<MvIndex>(a).k;
      // k/n raised m times: max(0, n - m*(n-k)) / n
      BigInt t = BigInt(n_) - m * BigInt(n_ - k);
      if (t < 0) t = 0;
      return MvIndex{static_cast<std::uint64_t>(t)};
    }
    case ChainKind::GodelRational:
      return a;
    case ChainKind::ProductRational: {
      const Rational& x = std::get<Rational>(a);
      if (x == 0) return kZero;
      if (x == 1) return kOne;
      const BigInt num = pow_bigint(boost::multiprecision::numerator(x), m);
      const BigInt den = pow_bigint(boost::multiprecision::denominator(x), m);
      return Rational(num, den);
    }
    case ChainKind::ProductOneGen: {
      const auto& x = std::get<OneGenElem>(a);
      if (x.bottom) return OneGenElem{true, 0};
      return OneGenElem{false, x.exp * m};
    }
  }
  throw DomainError("unreachable");
}

bool ChainAlgebra::is_n_contractive(std::uint64_t n) const {
  if (n < 1) throw DomainError("n-contractivity needs n >= 1");
  switch (kind_) {
    case ChainKind::GodelRational:
      return true;  // fusion is idempotent
    case ChainKind::MVn: {
      for (std::uint64_t k = 0; k <= n_; ++k) {
        AlgebraElement e = MvIndex{k};
        if (!(power(e, BigInt(n) + 1) == power(e, BigInt(n)))) return false;
      }
      return true;
    }
    default:
      // strict powers never stabilize on the infinite chains
      return false;
  }
}

bool ChainAlgebra::is_weakly_archimedean() const {
  switch (kind_) {
    case ChainKind::MVn: {
      // powers stabilize after at most n_ steps, so inf b^m = b^{n_}
      for (std::uint64_t bk = 0; bk <= n_; ++bk) {
        AlgebraElement stable = power(MvIndex{bk}, BigInt(n_));
        for (std::uint64_t ak = 0; ak <= n_; ++ak) {
          AlgebraElement a = MvIndex{ak};
          if (leq(a, stable) && !(fuse(a, MvIndex{bk}) == a)) return false;
        }
      }
      return true;
    }
    default:
      return true;
  }
}

AlgebraElement ChainAlgebra::pick_noncontractive_element(const BigInt& m) const {
  if (m < 0) throw DomainError("pick_noncontractive_element: m must be >= 0");
  switch (kind_) {
    case ChainKind::LukRational:
      return Rational(m + 1, m + 2);  // 1 - 1/(m+2)
    case ChainKind::ProductRational:
      return Rational(1, 2);
    case ChainKind::ProductOneGen:
      return OneGenElem{false, 1};
    case ChainKind::GodelRational:
      if (m == 0) return Rational(1, 2);
      throw NoSuchElement("the Godel chain is m-contractive for every m >= 1");
    case ChainKind::MVn: {
      if (BigInt(n_) >= m + 1) return MvIndex{n_ - 1};
      throw NoSuchElement("MV_" + std::to_string(n_) + " is " + m.str() + "-contractive");
    }
  }
  throw DomainError("unreachable");
}

AlgebraElement ChainAlgebra::parse_element(const std::string& text) const {
  switch (kind_) {
    case ChainKind::MVn: {
      Rational v = parse_rational(text);
      if (v < 0 || v > 1)
        throw CarrierMismatch("MV_n value out of [0,1]: " + text);
      const BigInt den = boost::multiprecision::denominator(v);
      if (BigInt(n_) % den != 0)
        throw CarrierMismatch("denominator of '" + text + "' does not divide " +
                              std::to_string(n_));
      BigInt k = boost::multiprecision::numerator(v) * (BigInt(n_) / den);
      return MvIndex{static_cast<std::uint64_t>(k)};
    }
    case ChainKind::ProductOneGen: {
      if (text == "0") return OneGenElem{true, 0};
      if (text == "1") return OneGenElem{false, 0};
      if (text.rfind("g^", 0) == 0) {
        try {
          BigInt e(text.substr(2));
          if (e < 0) throw DomainError("negative exponent");
          return OneGenElem{false, e};
        } catch (const std::runtime_error&) {
          throw CarrierMismatch("malformed one-generated element: '" + text + "'");
        }
      }
      throw CarrierMismatch("one-generated chain elements are written 0, 1 or g^<i>, got '" +
                            text + "'");
    }
    default: {
      Rational v = parse_rational(text);
      if (v < 0 || v > 1) throw CarrierMismatch("value out of [0,1]: " + text);
      return v;
    }
  }
}

std::string ChainAlgebra::element_to_string(const AlgebraElement& a) const {
  require_carrier(a);
  switch (kind_) {
    case ChainKind::MVn:
      return rational_to_string(Rational(std::get<MvIndex>(a).k, n_));
    case ChainKind::ProductOneGen: {
      const auto& x = std::get<OneGenElem>(a);
      if (x.bottom) return "0";
      if (x.exp == 0) return "1";
      return "g^" + x.exp.str();
    }
    default:
      return rational_to_string(std::get<Rational>(a));
  }
}

std::vector<AlgebraElement> ChainAlgebra::enumerate_carrier() const {
  if (kind_ != ChainKind::MVn)
    throw DomainError("only finite chains (mv:<n>) can be enumerated");
  std::vector<AlgebraElement> out;
  out.reserve(n_ + 1);
  for (std::uint64_t k = 0; k <= n_; ++k) out.push_back(MvIndex{k});
  return out;
}

}  // namespace mvmodal
