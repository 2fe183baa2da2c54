#include "cobsec/linalg.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cobsec {
namespace {

Matrix<Integer> random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread) {
  std::uniform_int_distribution<int> entry(-spread, spread);
  Matrix<Integer> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  }
  return m;
}

TEST(LinalgTest, DeterminantSmall) {
  Matrix<Integer> m(2, 2);
  m(0, 0) = 3;
  m(1, 0) = 3;
  m(1, 1) = 4;
  EXPECT_EQ(determinant(m), 12);
  EXPECT_EQ(determinant(Matrix<Integer>()), 1);
  // Needs a row swap.
  Matrix<Integer> swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  EXPECT_EQ(determinant(swap), -1);
}

TEST(LinalgTest, DeterminantMatchesRationalElimination) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    auto m = random_matrix(rng, n, n, trial % 3 == 0 ? 1 : 9);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) rows[r][c] = Rational(m(r, c));
    }
    EXPECT_EQ(Rational(determinant(m)), oracle::determinant(rows));
  }
}

TEST(LinalgTest, SolveSatisfiesSystem) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    auto a = random_matrix(rng, n, n, 5);
    auto b = random_matrix(rng, n, 1, 5);
    auto x = solve(a, b);
    if (determinant(a) == 0) {
      EXPECT_FALSE(x.has_value());
      continue;
    }
    ASSERT_TRUE(x.has_value());
    for (std::size_t r = 0; r < n; ++r) {
      Rational sum = 0;
      for (std::size_t c = 0; c < n; ++c) sum += Rational(a(r, c)) * (*x)(c, 0);
      EXPECT_EQ(sum, Rational(b(r, 0)));
    }
  }
}

TEST(LinalgTest, NullspaceAndRank) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + (trial / 4) % 6;
    auto a = matrix_cast<Rational>(random_matrix(rng, rows, cols, 2));
    const auto basis = nullspace(a);
    EXPECT_EQ(rank(a) + basis.size(), cols);
    for (const auto& v : basis) {
      for (std::size_t r = 0; r < rows; ++r) {
        Rational sum = 0;
        for (std::size_t c = 0; c < cols; ++c) sum += a(r, c) * v[c];
        EXPECT_EQ(sum, 0);
      }
    }
  }
}

TEST(LinalgTest, PrimitiveIntegerVector) {
  std::vector<Rational> v{Rational(-4, 3), Rational(1), Rational(0)};
  EXPECT_EQ(primitive_integer_vector(v), (std::vector<Integer>{4, -3, 0}));
  std::vector<Rational> zero{Rational(0)};
  EXPECT_THROW(primitive_integer_vector(zero), std::invalid_argument);
}

}  // namespace
}  // namespace cobsec
