#include "cobsec/class_expression.hpp"

#include "cobsec/errors.hpp"

#include <cctype>
#include <string>

namespace cobsec {

int ClassTerm::degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.dimension * f.power;
  return d;
}

namespace {

constexpr int kMaxLiteral = 100000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ClassExpr expression() {
    ClassExpr expr;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    expr.terms.push_back(term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
      negative = peek() == '-';
      ++pos_;
      expr.terms.push_back(term(negative));
    }
    return expr;
  }

  std::vector<CpFactor> product() {
    std::vector<CpFactor> factors{factor()};
    while (true) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      factors.push_back(factor());
    }
    skip_space();
    if (!at_end()) throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos_);
    return factors;
  }

 private:
  ClassTerm term(bool negative) {
    skip_space();
    ClassTerm t;
    t.position = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = integer_literal();
      Integer den = 1;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        den = integer_literal();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      t.coefficient = Rational(num, den);
      skip_space();
      if (peek() != '*') throw ParseError("expected '*' after coefficient", pos_);
      ++pos_;
    }
    if (negative) t.coefficient = -t.coefficient;
    t.factors.push_back(factor());
    while (true) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      t.factors.push_back(factor());
    }
    return t;
  }

  CpFactor factor() {
    skip_space();
    const std::size_t at = pos_;
    if (text_.substr(pos_, 2) != "CP") throw ParseError("expected 'CP'", pos_);
    pos_ += 2;
    skip_space();
    CpFactor f;
    f.dimension = small_literal();
    if (f.dimension < 1) throw ParseError("factors must have n >= 1", at);
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t power_at = pos_;
      f.power = small_literal();
      if (f.power < 1) throw ParseError("powers must be >= 1", power_at);
    }
    return f;
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int small_literal() {
    const std::size_t start = pos_;
    Integer value = integer_literal();
    if (value > kMaxLiteral) throw ParseError("integer literal too large", start);
    return value.convert_to<int>();
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassExpr parse(std::string_view text) {
  auto expr = Parser(text).expression();
  const int d = expr.terms.front().degree();
  for (const auto& t : expr.terms) {
    if (t.degree() != d) {
      throw ParseError("mixed degrees " + std::to_string(d) + " and " + std::to_string(t.degree()), t.position);
    }
  }
  return expr;
}

CobordismClass elaborate(const ClassExpr& expr) {
  if (expr.terms.empty()) throw PreconditionError("empty class expression");
  CobordismClass x(expr.terms.front().degree());
  for (const auto& t : expr.terms) {
    std::vector<int> parts;
    for (const auto& f : t.factors) parts.insert(parts.end(), static_cast<std::size_t>(f.power), f.dimension);
    x.add_term(Partition(std::move(parts)), t.coefficient);
  }
  return x;
}

CobordismClass parse_class(std::string_view text) { return elaborate(parse(text)); }

ManifoldModel parse_manifold(std::string_view text) {
  std::vector<int> factors;
  for (const auto& f : Parser(text).product()) factors.insert(factors.end(), static_cast<std::size_t>(f.power), f.dimension);
  return ManifoldModel(std::move(factors));
}

}  // namespace cobsec
