#include "cobsec/linalg.hpp"

#include <algorithm>

namespace cobsec {

namespace {

// Fraction-free forward elimination of the augmented matrix [a | rhs] in place.
// After return the left block is upper triangular and its last diagonal entry is
// det(a) * sign. Returns false if a is singular.
bool bareiss_forward(Matrix<Integer>& m, std::size_t n, int& sign) {
  Integer previous = 1;
  sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        // Exact division: Sylvester's identity.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return true;
}

}  // namespace

Integer determinant(const Matrix<Integer>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  Matrix<Integer> m = a;
  int sign = 1;
  if (!bareiss_forward(m, m.rows(), sign)) return 0;
  return sign * m(m.rows() - 1, m.rows() - 1);
}

std::optional<Matrix<Rational>> solve(const Matrix<Integer>& a, const Matrix<Integer>& rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n || rhs.rows() != n) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t k = rhs.cols();
  Matrix<Integer> m(n, n + k);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < k; ++c) m(r, n + c) = rhs(r, c);
  }
  int sign = 1;
  if (!bareiss_forward(m, n, sign)) return std::nullopt;

  Matrix<Rational> x(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      Rational sum = m(i, n + c);
      for (std::size_t j = i + 1; j < n; ++j) sum -= Rational(m(i, j)) * x(j, c);
      x(i, c) = sum / Rational(m(i, i));
    }
  }
  return x;
}

std::optional<std::vector<Rational>> solve(const Matrix<Integer>& a, std::span<const Integer> rhs) {
  Matrix<Integer> b(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  std::vector<Rational> out(x->rows());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*x)(i, 0);
  return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix<Rational>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(pivot, row);
    const Rational lead = a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) /= lead;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix<Rational> a) { return rref(a).size(); }

std::vector<std::vector<Rational>> nullspace(Matrix<Rational> a) {
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> v) {
  Integer common_denominator = 1;
  for (const auto& q : v) common_denominator = lcm(common_denominator, denominator(q));
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer content = 0;
  for (const auto& q : v) {
    out.push_back(numerator(q) * (common_denominator / denominator(q)));
    content = gcd(content, out.back());
  }
  if (content == 0) throw std::invalid_argument("primitive_integer_vector: zero vector");
  auto first = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) content = -content;
  for (auto& x : out) x /= content;
  return out;
}

}  // namespace cobsec
