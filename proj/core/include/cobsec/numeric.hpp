#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cobsec {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Parses "p" or "p/q" with an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace cobsec
