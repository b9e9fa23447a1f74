#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace mvmodal {

// Exact arithmetic only. Floating point is forbidden everywhere in this
// project; comparisons on huge powers must be decided exactly.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (q > 0 after normalization). Throws DomainError on
/// malformed input.
Rational parse_rational(const std::string& text);

/// Renders "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

/// base^exp for exp >= 0.
BigInt pow_bigint(const BigInt& base, const BigInt& exp);

/// Number of digits of y >= 1 in the given base >= 2.
BigInt digit_count(const BigInt& y, const BigInt& base);

}  // namespace mvmodal
