#include "cobsec/obstruction.hpp"

#include "cobsec/errors.hpp"
#include "cobsec/symmetric_functions.hpp"

namespace cobsec {

namespace {

void check_sections(int d, int r) {
  if (r < 0 || r > d) {
    throw PreconditionError("number of sections must satisfy 0 <= r <= d (got r=" + std::to_string(r) +
                            ", d=" + std::to_string(d) + ")");
  }
}

template <class ValueOf>
ObstructionReport make_report(int d, int r, ValueOf&& value_of) {
  ObstructionReport report;
  report.degree = d;
  report.sections = r;
  for (const auto& omega : enumerate(d)) {
    if (omega.length() <= d - r) continue;
    report.entries.push_back({omega, value_of(omega)});
    if (!report.witness && report.entries.back().value != 0) report.witness = report.entries.back();
  }
  report.vanishes = !report.witness.has_value();
  return report;
}

}  // namespace

ObstructionReport gamma_rational(const CobordismClass& x, int r, int max_degree) {
  check_sections(x.degree(), r);
  const auto coords = s_coordinates(x, max_degree);
  return make_report(x.degree(), r, [&](const Partition& omega) { return coords.at(omega); });
}

ObstructionReport gamma_rational_from_chern_numbers(int d, const RationalPartitionMap& chern_numbers, int r) {
  if (d < 1) throw PreconditionError("degree must be >= 1");
  check_sections(d, r);
  for (const auto& lambda : enumerate(d)) {
    if (!chern_numbers.contains(lambda)) throw PreconditionError("missing Chern number for " + to_string(lambda));
  }
  for (const auto& [lambda, value] : chern_numbers) {
    if (lambda.weight() != d) throw DegreeMismatchError("Chern number " + to_string(lambda) + " has the wrong degree");
  }
  return make_report(d, r, [&](const Partition& omega) {
    const auto polynomial = s_polynomial(omega);
    Rational sum = 0;
    for (const auto& [lambda, coeff] : polynomial.terms()) sum += Rational(coeff) * chern_numbers.at(lambda);
    return sum;
  });
}

bool admits_sections_rationally(const CobordismClass& x, int r, int max_degree) {
  return gamma_rational(x, r, max_degree).vanishes;
}

std::vector<CobordismClass> kernel_basis(int d, int r, int max_degree) {
  check_sections(d, r);
  const auto s = s_matrix(d, max_degree);
  std::vector<std::size_t> long_rows;
  for (std::size_t row = 0; row < s->index.size(); ++row) {
    if (s->index[row].length() > d - r) long_rows.push_back(row);
  }
  Matrix<Rational> constraints(long_rows.size(), s->index.size());
  for (std::size_t i = 0; i < long_rows.size(); ++i) {
    for (std::size_t col = 0; col < s->index.size(); ++col) constraints(i, col) = Rational(s->entries(long_rows[i], col));
  }

  std::vector<CobordismClass> basis;
  for (const auto& v : nullspace(std::move(constraints))) {
    const auto ints = primitive_integer_vector(v);
    CobordismClass x(d);
    for (std::size_t i = 0; i < ints.size(); ++i) x.add_term(s->index[i], Rational(ints[i]));
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace cobsec
