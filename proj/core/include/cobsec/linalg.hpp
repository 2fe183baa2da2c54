#pragma once

#include "cobsec/numeric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace cobsec {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const Matrix<Integer>& a);

/// Solves a * X = rhs exactly for square a. Returns nullopt if a is singular.
std::optional<Matrix<Rational>> solve(const Matrix<Integer>& a, const Matrix<Integer>& rhs);
std::optional<std::vector<Rational>> solve(const Matrix<Integer>& a, std::span<const Integer> rhs);

std::size_t rank(Matrix<Rational> a);

/// Basis of {x : a x = 0}, one vector per free column of the reduced row echelon form.
std::vector<std::vector<Rational>> nullspace(Matrix<Rational> a);

/// Scales a nonzero rational vector to a primitive integer vector (content 1) whose
/// first nonzero entry is positive. Returns the scaled vector.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> v);

template <class To, class From>
Matrix<To> matrix_cast(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = To(m(r, c));
  }
  return out;
}

}  // namespace cobsec
