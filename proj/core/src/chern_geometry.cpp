#include "cobsec/chern_geometry.hpp"

#include <functional>
#include <map>
#include <numeric>

namespace cobsec {

ManifoldModel::ManifoldModel(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw PreconditionError("a manifold model needs at least one factor");
  for (int n : factors_) {
    if (n < 1) throw PreconditionError("factors must have n >= 1");
  }
  dimension_ = std::accumulate(factors_.begin(), factors_.end(), 0);
}

ManifoldModel ManifoldModel::from_partition(const Partition& lambda) {
  return ManifoldModel(std::vector<int>(lambda.parts().begin(), lambda.parts().end()));
}

std::string manifold_name(const Partition& shape) {
  std::string out;
  const auto parts = shape.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += "*";
    out += "CP" + std::to_string(parts[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string ManifoldModel::canonical_name() const { return manifold_name(shape()); }

namespace detail {

RingLayout::RingLayout(const ManifoldModel& m) : model(m) {
  const auto bounds = m.factors();
  strides.resize(bounds.size());
  for (std::size_t f = bounds.size(); f-- > 0;) {
    strides[f] = size;
    size *= static_cast<std::size_t>(bounds[f]) + 1;
  }
  exponents.resize(size * bounds.size());
  degrees.resize(size);
  for (std::size_t index = 0; index < size; ++index) {
    int degree = 0;
    for (std::size_t f = 0; f < bounds.size(); ++f) {
      const int a = static_cast<int>((index / strides[f]) % (static_cast<std::size_t>(bounds[f]) + 1));
      exponents[index * bounds.size() + f] = a;
      degree += a;
    }
    degrees[index] = degree;
  }
}

std::size_t RingLayout::index_of(std::span<const int> exps) const {
  const auto bounds = model.factors();
  if (exps.size() != bounds.size()) throw PreconditionError("exponent vector has the wrong number of factors");
  std::size_t index = 0;
  for (std::size_t f = 0; f < bounds.size(); ++f) {
    if (exps[f] < 0 || exps[f] > bounds[f]) throw PreconditionError("exponent outside truncation bounds");
    index += static_cast<std::size_t>(exps[f]) * strides[f];
  }
  return index;
}

}  // namespace detail

namespace {

template <class Coeff>
TruncatedPolynomial<Coeff> total_chern_class_in(const ManifoldModel& m) {
  auto total = TruncatedPolynomial<Coeff>::one(m);
  const auto bounds = m.factors();
  for (std::size_t f = 0; f < bounds.size(); ++f) {
    TruncatedPolynomial<Coeff> factor(m);
    std::vector<int> exps(bounds.size(), 0);
    Integer binomial = 1;
    for (int j = 0; j <= bounds[f]; ++j) {
      exps[f] = j;
      factor.set_coefficient(exps, Coeff(binomial));
      binomial = binomial * (bounds[f] + 1 - j) / (j + 1);
    }
    total = total * factor;
  }
  return total;
}

void check_degree(const ManifoldModel& m, const Partition& lambda) {
  if (lambda.weight() != m.complex_dimension()) {
    throw DegreeMismatchError("partition weight must equal complex dimension (" + std::to_string(lambda.weight()) +
                              " vs " + std::to_string(m.complex_dimension()) + ")");
  }
}

}  // namespace

RingElement total_chern_class(const ManifoldModel& m) { return total_chern_class_in<Rational>(m); }

Integer chern_number(const ManifoldModel& m, const Partition& lambda) {
  check_degree(m, lambda);
  const auto total = total_chern_class_in<Integer>(m);
  auto product = TruncatedPolynomial<Integer>::one(m);
  for (int part : lambda.parts()) product = product * total.graded_piece(part);
  return product.top_coefficient();
}

PartitionMap chern_numbers(const ManifoldModel& m) {
  const int d = m.complex_dimension();
  const auto total = total_chern_class_in<Integer>(m);
  std::vector<TruncatedPolynomial<Integer>> classes;
  for (int j = 0; j <= d; ++j) classes.push_back(total.graded_piece(j));

  PartitionMap out;
  std::vector<int> parts;
  // Depth-first over partitions with decreasing parts, sharing prefix products.
  std::function<void(int, int, const TruncatedPolynomial<Integer>&)> visit =
      [&](int remaining, int max_part, const TruncatedPolynomial<Integer>& prefix) {
        if (remaining == 0) {
          out.emplace(Partition(parts), prefix.top_coefficient());
          return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
          parts.push_back(part);
          visit(remaining - part, part, prefix * classes[part]);
          parts.pop_back();
        }
      };
  visit(d, d, TruncatedPolynomial<Integer>::one(m));
  return out;
}

Integer evaluate(const ChernPolynomial& p, const PartitionMap& numbers) {
  Integer sum = 0;
  for (const auto& [monomial, coeff] : p.terms()) {
    auto it = numbers.find(monomial);
    if (it == numbers.end()) throw PreconditionError("missing Chern number for " + to_string(monomial));
    sum += coeff * it->second;
  }
  return sum;
}

Integer s_number(const ManifoldModel& m, const Partition& omega) {
  check_degree(m, omega);
  return evaluate(s_polynomial(omega), chern_numbers(m));
}

Integer euler_characteristic(const ManifoldModel& m) {
  // Top Chern class c_d.
  return chern_number(m, Partition{m.complex_dimension()});
}

}  // namespace cobsec
