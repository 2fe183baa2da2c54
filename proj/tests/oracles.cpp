#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace oracle {

namespace {

std::int64_t count(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return count(n, k - 1) + count(n - k, k);
}

void compositions(int n, std::vector<int>& prefix, std::set<std::vector<int>>& out) {
  if (n == 0) {
    auto sorted = prefix;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    out.insert(sorted);
    return;
  }
  for (int part = 1; part <= n; ++part) {
    prefix.push_back(part);
    compositions(n - part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<int> padded(const Partition& p, int vars) {
  std::vector<int> e(p.parts().begin(), p.parts().end());
  e.resize(static_cast<std::size_t>(vars), 0);
  return e;
}

}  // namespace

std::int64_t partition_count(int n) { return count(n, n); }

std::vector<Partition> partitions_by_compositions(int n) {
  std::set<std::vector<int>> unique;
  std::vector<int> prefix;
  compositions(n, prefix, unique);
  std::vector<Partition> out;
  for (const auto& parts : unique) out.emplace_back(parts);
  return out;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly add(const Poly& a, const Poly& b, const Integer& scale) {
  Poly out = a;
  for (const auto& [e, c] : b) out[e] += scale * c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly elementary(int vars, int k) {
  Poly out;
  std::vector<int> mask(static_cast<std::size_t>(vars), 0);
  if (k > vars) return out;
  std::fill(mask.end() - k, mask.end(), 1);
  do {
    out[mask] += 1;
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

Poly elementary_product(int vars, const Partition& lambda) {
  Poly out{{std::vector<int>(static_cast<std::size_t>(vars), 0), 1}};
  for (int part : lambda.parts()) out = multiply(out, elementary(vars, part));
  return out;
}

Poly monomial_symmetric(int vars, const Partition& omega) {
  auto e = padded(omega, vars);
  std::sort(e.begin(), e.end());
  Poly out;
  do {
    out[e] = 1;
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

Integer monomial_coefficient(const Poly& p, int vars, const Partition& mu) {
  auto it = p.find(padded(mu, vars));
  return it == p.end() ? Integer(0) : it->second;
}

EPoly newton_power_sum(int k) {
  // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
  std::vector<EPoly> power(static_cast<std::size_t>(k) + 1);
  for (int n = 1; n <= k; ++n) {
    EPoly p;
    for (int i = 1; i < n; ++i) {
      const int sign = (i % 2 == 1) ? 1 : -1;
      for (const auto& [mono, c] : power[n - i]) {
        std::vector<int> parts(mono.parts().begin(), mono.parts().end());
        parts.push_back(i);
        p[Partition(parts)] += sign * c;
      }
    }
    p[Partition{n}] += (n % 2 == 1 ? 1 : -1) * n;
    std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
    power[n] = std::move(p);
  }
  return power[k];
}

namespace {

// Z[x_1..x_k]/(x_i^{n_i+1}) as a sparse map.
struct Truncated {
  std::vector<int> bounds;
  Poly terms;

  Truncated times(const Truncated& other) const {
    Truncated out{bounds, {}};
    for (const auto& [ea, ca] : terms) {
      for (const auto& [eb, cb] : other.terms) {
        std::vector<int> e(ea.size());
        bool alive = true;
        for (std::size_t i = 0; i < e.size() && alive; ++i) {
          e[i] = ea[i] + eb[i];
          alive = e[i] <= bounds[i];
        }
        if (alive) out.terms[e] += ca * cb;
      }
    }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  Integer top() const {
    auto it = terms.find(bounds);
    return it == terms.end() ? Integer(0) : it->second;
  }
};

Truncated one(const std::vector<int>& bounds) {
  return Truncated{bounds, {{std::vector<int>(bounds.size(), 0), 1}}};
}

}  // namespace

Integer s_number_by_roots(const std::vector<int>& factors, const Partition& omega) {
  std::vector<int> root_owner;
  for (std::size_t f = 0; f < factors.size(); ++f) root_owner.insert(root_owner.end(), factors[f] + 1, static_cast<int>(f));
  const int roots = static_cast<int>(root_owner.size());
  if (omega.length() > roots) return 0;

  auto e = padded(omega, roots);
  std::sort(e.begin(), e.end());
  Truncated sum{factors, {}};
  do {
    std::vector<int> exps(factors.size(), 0);
    bool alive = true;
    for (int i = 0; i < roots && alive; ++i) {
      exps[root_owner[i]] += e[i];
      alive = exps[root_owner[i]] <= factors[root_owner[i]];
    }
    if (alive) sum.terms[exps] += 1;
  } while (std::next_permutation(e.begin(), e.end()));
  std::vector<int> top(factors.begin(), factors.end());
  auto it = sum.terms.find(top);
  return it == sum.terms.end() ? Integer(0) : it->second;
}

Integer chern_number_by_expansion(const std::vector<int>& factors, const Partition& lambda) {
  // c(TM) graded pieces by expanding each (1 + x_i)^{n_i+1} term by term.
  Truncated total = one(factors);
  for (std::size_t f = 0; f < factors.size(); ++f) {
    Truncated linear = one(factors);
    std::vector<int> x(factors.size(), 0);
    x[f] = 1;
    linear.terms[x] = 1;
    for (int i = 0; i <= factors[f]; ++i) total = total.times(linear);
  }
  auto piece = [&](int degree) {
    Truncated out{factors, {}};
    for (const auto& [e, c] : total.terms) {
      if (std::accumulate(e.begin(), e.end(), 0) == degree) out.terms[e] = c;
    }
    return out;
  };
  Truncated product = one(factors);
  for (int part : lambda.parts()) product = product.times(piece(part));
  return product.top();
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

}  // namespace oracle
