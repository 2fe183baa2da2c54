#include "cobsec/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace cobsec {

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("invalid integer literal '" + std::string(text) + "'");
    }
  }
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    value = Rational(num, den);
  } else {
    value = Rational(parse_integer(text));
  }
  return negative ? Rational(-value) : value;
}

Integer gcd(const Integer& a, const Integer& b) { return abs(boost::multiprecision::gcd(a, b)); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(boost::multiprecision::lcm(a, b));
}

}  // namespace cobsec
