#include "cobsec/cobordism_algebra.hpp"

#include "cobsec/errors.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace cobsec {

CobordismClass::CobordismClass(int degree) : degree_(degree) {
  if (degree < 1) throw PreconditionError("cobordism classes are built in degree >= 1");
}

CobordismClass CobordismClass::basis(const Partition& lambda) {
  CobordismClass x(lambda.weight());
  x.add_term(lambda, 1);
  return x;
}

bool CobordismClass::has_integer_coords() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const auto& kv) { return is_integral(kv.second); });
}

Rational CobordismClass::coefficient(const Partition& lambda) const {
  auto it = coords_.find(lambda);
  return it == coords_.end() ? Rational(0) : it->second;
}

void CobordismClass::add_term(const Partition& lambda, const Rational& coeff) {
  if (lambda.weight() != degree_) {
    throw DegreeMismatchError("mixed degrees " + std::to_string(degree_) + " and " + std::to_string(lambda.weight()));
  }
  if (coeff == 0) return;
  auto [it, inserted] = coords_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coords_.erase(it);
  }
}

CobordismClass& CobordismClass::operator+=(const CobordismClass& other) {
  if (other.degree_ != degree_) {
    throw DegreeMismatchError("mixed degrees " + std::to_string(degree_) + " and " + std::to_string(other.degree_));
  }
  for (const auto& [lambda, q] : other.coords_) add_term(lambda, q);
  return *this;
}

CobordismClass& CobordismClass::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [lambda, q] : coords_) q *= scalar;
  return *this;
}

std::string to_string(const CobordismClass& x) {
  if (x.is_zero()) return "0*CP" + std::to_string(x.degree());
  std::string out;
  bool first = true;
  for (const auto& [lambda, q] : x.coords()) {
    if (first) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(q);
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += manifold_name(lambda);
  }
  return out;
}

std::size_t SMatrix::position(const Partition& p) const {
  auto it = std::find(index.begin(), index.end(), p);
  if (it == index.end()) throw DegreeMismatchError("partition " + to_string(p) + " is not of degree " + std::to_string(degree));
  return static_cast<std::size_t>(it - index.begin());
}

namespace {

void guard_degree(int d, int max_degree) {
  if (d < 1 || d > max_degree) {
    throw ResourceGuardError("degree " + std::to_string(d) + " outside the supported range 1.." +
                             std::to_string(max_degree));
  }
}

std::shared_ptr<const SMatrix> build_s_matrix(int d) {
  auto s = std::make_shared<SMatrix>();
  s->degree = d;
  s->index = enumerate(d);
  const std::size_t n = s->index.size();
  std::vector<ChernPolynomial> polys;
  polys.reserve(n);
  for (const auto& omega : s->index) polys.push_back(s_polynomial(omega));

  s->entries = Matrix<Integer>(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const auto numbers = chern_numbers(ManifoldModel::from_partition(s->index[col]));
    for (std::size_t row = 0; row < n; ++row) s->entries(row, col) = evaluate(polys[row], numbers);
  }
  s->determinant = determinant(s->entries);
  return s;
}

}  // namespace

std::shared_ptr<const SMatrix> s_matrix(int d, int max_degree) {
  guard_degree(d, max_degree);
  static std::shared_mutex mutex;
  static std::map<int, std::shared_ptr<const SMatrix>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  auto built = build_s_matrix(d);
  std::unique_lock lock(mutex);
  return cache.try_emplace(d, std::move(built)).first->second;
}

StongVerdict verify_stong(int d, int max_degree) {
  const auto s = s_matrix(d, max_degree);
  return {s->determinant != 0, s->determinant};
}

RationalPartitionMap s_coordinates(const CobordismClass& x, int max_degree) {
  const auto s = s_matrix(x.degree(), max_degree);
  RationalPartitionMap out;
  for (std::size_t row = 0; row < s->index.size(); ++row) {
    Rational value = 0;
    for (const auto& [lambda, q] : x.coords()) value += q * Rational(s->entries(row, s->position(lambda)));
    out.emplace(s->index[row], value);
  }
  return out;
}

bool is_rational_generator(const CobordismClass& x, int max_degree) {
  guard_degree(x.degree(), max_degree);
  return s_coordinates(x, max_degree).at(Partition{x.degree()}) != 0;
}

std::string to_string(GeneratorVerdict v) {
  switch (v) {
    case GeneratorVerdict::generator:
      return "generator";
    case GeneratorVerdict::not_generator:
      return "not_generator";
    case GeneratorVerdict::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

std::vector<PrimePower> prime_power_decompositions(const Integer& n) {
  std::vector<PrimePower> out;
  if (n < 2) return out;
  // Smallest prime factor p; n is a prime power iff stripping p leaves 1.
  Integer p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) p = n;
  Integer rest = n;
  int exponent = 0;
  while (rest % p == 0) {
    rest /= p;
    ++exponent;
  }
  if (rest == 1) out.push_back({p, exponent});
  return out;
}

GeneratorCheck integral_generator_check(const CobordismClass& x, int max_degree) {
  if (!x.has_integer_coords()) throw PreconditionError("integral generator check needs integer coordinates");
  GeneratorCheck check;
  check.degree = x.degree();
  const Rational top = s_coordinates(x, max_degree).at(Partition{x.degree()});
  check.s_top = numerator(top);
  check.prime_powers = prime_power_decompositions(Integer(x.degree() + 1));
  check.ambiguous = check.prime_powers.size() > 1;
  check.caveat =
      "criterion characterizes generators among classes of manifolds; applied formally to integer combinations";
  if (x.is_zero()) {
    check.verdict = GeneratorVerdict::not_applicable;
    return check;
  }
  bool ok = false;
  if (check.prime_powers.empty()) {
    ok = abs(check.s_top) == 1;
  } else {
    ok = std::all_of(check.prime_powers.begin(), check.prime_powers.end(),
                     [&](const PrimePower& pp) { return abs(check.s_top) == pp.prime; });
  }
  check.verdict = ok ? GeneratorVerdict::generator : GeneratorVerdict::not_generator;
  return check;
}

SectionGenerator construct_section_generator(int d, int r, int max_degree) {
  if (r < 1 || r >= d) {
    throw PreconditionError("section generator needs 1 <= r < d (got d=" + std::to_string(d) +
                            ", r=" + std::to_string(r) + ")");
  }
  const auto s = s_matrix(d, max_degree);
  std::vector<Integer> target(s->index.size(), 0);
  target[s->position(Partition{d})] = 1;
  const auto v = solve(s->entries, target);
  if (!v) throw std::logic_error("s-matrix is singular in degree " + std::to_string(d));

  Integer c = 1;
  for (const auto& q : *v) c = lcm(c, denominator(q));
  CobordismClass x(d);
  for (std::size_t i = 0; i < v->size(); ++i) x.add_term(s->index[i], (*v)[i] * Rational(c));
  return {std::move(x), c};
}

}  // namespace cobsec
