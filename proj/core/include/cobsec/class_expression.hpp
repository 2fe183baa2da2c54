#pragma once

#include "cobsec/chern_geometry.hpp"
#include "cobsec/cobordism_algebra.hpp"
#include "cobsec/numeric.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace cobsec {

// Textual language for cobordism classes:
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := [rational '*'] factor ('*' factor)*
//   factor   := 'CP' int ['^' int]
//   rational := int ['/' int]
//
// Whitespace between tokens is ignored.

struct CpFactor {
  int dimension = 1;
  int power = 1;

  friend bool operator==(const CpFactor&, const CpFactor&) = default;
};

struct ClassTerm {
  Rational coefficient = 1;
  std::vector<CpFactor> factors;
  std::size_t position = 0;  // offset of the term in the source text

  int degree() const;
};

struct ClassExpr {
  std::vector<ClassTerm> terms;
};

/// Throws ParseError (with position) on syntax errors, zero denominators,
/// CP0, zero powers and terms of differing degree.
ClassExpr parse(std::string_view text);

/// Canonicalizes factors, merges like terms and drops zeros.
/// Throws DegreeMismatchError on mixed degrees.
CobordismClass elaborate(const ClassExpr& expr);

CobordismClass parse_class(std::string_view text);

/// A single product of CP literals without coefficient, e.g. "CP1*CP2" or "CP1^3".
ManifoldModel parse_manifold(std::string_view text);

}  // namespace cobsec
