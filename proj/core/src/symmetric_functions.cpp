#include "cobsec/symmetric_functions.hpp"

#include "cobsec/errors.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace cobsec {

Integer ChernPolynomial::coefficient(const Partition& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Integer(0) : it->second;
}

void ChernPolynomial::add_term(const Partition& monomial, const Integer& coeff) {
  if (monomial.weight() != degree_) {
    throw DegreeMismatchError("monomial " + to_string(monomial) + " does not have degree " +
                              std::to_string(degree_));
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

// Visits every k-subset of {0, ..., n-1} as a 0/1 mask.
template <class Visit>
void for_each_subset(int n, int k, Visit&& visit) {
  if (k > n) return;
  std::vector<int> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.end() - k, mask.end(), 1);
  do {
    visit(mask);
  } while (std::next_permutation(mask.begin(), mask.end()));
}

std::vector<int> padded(const Partition& p, int n) {
  std::vector<int> out(p.parts().begin(), p.parts().end());
  out.resize(static_cast<std::size_t>(n), 0);
  return out;
}

Partition from_exponents(std::vector<int> exponents) {
  std::erase(exponents, 0);
  return Partition(std::move(exponents));
}

// m_mu * e_k in n variables, coefficient of m_nu read off the sorted monomial t^nu.
MonomialSymVector multiply_by_elementary(const MonomialSymVector& v, int k, int n) {
  MonomialSymVector out{v.degree + k, {}};
  for (const auto& [mu, a] : v.coeffs) {
    const auto base = padded(mu, n);
    PartitionMap targets;
    for_each_subset(n, k, [&](const std::vector<int>& mask) {
      auto e = base;
      for (int i = 0; i < n; ++i) e[i] += mask[i];
      targets.try_emplace(from_exponents(std::move(e)), 0);
    });
    for (auto& [nu, count] : targets) {
      const auto rep = padded(nu, n);
      for_each_subset(n, k, [&](const std::vector<int>& mask) {
        auto e = rep;
        for (int i = 0; i < n; ++i) {
          e[i] -= mask[i];
          if (e[i] < 0) return;
        }
        std::sort(e.begin(), e.end(), std::greater<>());
        if (e == base) ++count;
      });
      auto& slot = out.coeffs[nu];
      slot += a * count;
      if (slot == 0) out.coeffs.erase(nu);
    }
  }
  return out;
}

std::shared_ptr<const TransitionTable> build_transition(int d) {
  auto table = std::make_shared<TransitionTable>();
  table->degree = d;
  table->basis = enumerate(d);
  const std::size_t n = table->basis.size();

  table->elementary_in_monomial = Matrix<Integer>(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const auto expansion = elementary_in_monomial(table->basis[col]);
    for (std::size_t row = 0; row < n; ++row) {
      auto it = expansion.coeffs.find(table->basis[row]);
      if (it != expansion.coeffs.end()) table->elementary_in_monomial(row, col) = it->second;
    }
  }

  auto inverse = solve(table->elementary_in_monomial, Matrix<Integer>::identity(n));
  if (!inverse) throw std::logic_error("elementary-to-monomial transition is singular in degree " + std::to_string(d));
  table->monomial_in_elementary = Matrix<Integer>(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!is_integral((*inverse)(r, c))) {
        throw std::logic_error("elementary-to-monomial transition is not unimodular in degree " + std::to_string(d));
      }
      table->monomial_in_elementary(r, c) = numerator((*inverse)(r, c));
    }
  }
  return table;
}

}  // namespace

MonomialSymVector elementary_in_monomial(const Partition& lambda) {
  const int n = lambda.weight();
  MonomialSymVector v{0, {}};
  v.coeffs.emplace(Partition{}, 1);
  for (int part : lambda.parts()) v = multiply_by_elementary(v, part, n);
  return v;
}

std::shared_ptr<const TransitionTable> transition_table(int d) {
  if (d < 1) throw PreconditionError("transition table needs degree >= 1");
  static std::shared_mutex mutex;
  static std::map<int, std::shared_ptr<const TransitionTable>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  auto table = build_transition(d);
  std::unique_lock lock(mutex);
  return cache.try_emplace(d, std::move(table)).first->second;
}

ChernPolynomial s_polynomial(const Partition& omega) {
  if (omega.weight() < 1) throw PreconditionError("s-polynomial needs a partition of weight >= 1");
  const auto table = transition_table(omega.weight());
  const auto& basis = table->basis;
  const auto column = static_cast<std::size_t>(std::find(basis.begin(), basis.end(), omega) - basis.begin());

  ChernPolynomial p(omega.weight());
  for (std::size_t row = 0; row < basis.size(); ++row) {
    p.add_term(basis[row], table->monomial_in_elementary(row, column));
  }
  return p;
}

ChernPolynomial truncate_classes(const ChernPolynomial& p, int n) {
  if (n < 1) throw PreconditionError("truncation index must be >= 1");
  ChernPolynomial out(p.degree());
  for (const auto& [monomial, coeff] : p.terms()) {
    if (monomial.max_part() < n) out.add_term(monomial, coeff);
  }
  return out;
}

std::string to_string(const ChernPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [monomial, coeff] = *it;
    Integer magnitude = abs(coeff);
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;

    std::string factors;
    // Parts are stored decreasing; print increasing.
    auto parts = monomial.parts();
    for (std::size_t i = parts.size(); i > 0;) {
      const int index = parts[i - 1];
      std::size_t j = i;
      while (j > 0 && parts[j - 1] == index) --j;
      if (!factors.empty()) factors += "*";
      factors += "c" + std::to_string(index);
      if (i - j > 1) factors += "^" + std::to_string(i - j);
      i = j;
    }
    if (factors.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.str() + "*" + factors;
    }
  }
  return out;
}

}  // namespace cobsec
