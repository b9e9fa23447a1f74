#include "mvmodal/rational.hpp"

#include <cctype>

#include "mvmodal/errors.hpp"

namespace mvmodal {

Rational parse_rational(const std::string& text) {
  auto bad = [&] { throw DomainError("malformed rational: '" + text + "'"); };
  if (text.empty()) bad();
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) bad();
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) bad();
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad();
  };
  try {
    if (slash == std::string::npos) {
      check_int(text);
      return Rational(BigInt(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    BigInt d(den);
    if (d == 0) bad();
    return Rational(BigInt(num), d);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational(0);  // unreachable
}

std::string rational_to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt pow_bigint(const BigInt& base, const BigInt& exp) {
  if (exp < 0) throw DomainError("pow_bigint: negative exponent");
  BigInt result = 1;
  BigInt b = base;
  BigInt e = exp;
  while (e > 0) {
    if ((e & 1) != 0) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

BigInt digit_count(const BigInt& y, const BigInt& base) {
  if (base < 2) throw DomainError("digit_count: base must be >= 2");
  if (y < 1) throw DomainError("digit_count: argument must be >= 1");
  BigInt count = 0;
  BigInt rest = y;
  while (rest > 0) {
    ++count;
    rest /= base;
  }
  return count;
}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& detail)
    : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + detail),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace mvmodal
