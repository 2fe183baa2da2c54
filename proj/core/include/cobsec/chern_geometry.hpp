#pragma once

#include "cobsec/errors.hpp"
#include "cobsec/numeric.hpp"
#include "cobsec/partitions.hpp"
#include "cobsec/symmetric_functions.hpp"

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cobsec {

/// CP^{n_1} x ... x CP^{n_k}. Factor order is kept as given; it fixes the
/// order of the ring generators x_1, ..., x_k but nothing else.
class ManifoldModel {
 public:
  /// Throws PreconditionError unless there is at least one factor and every n_i >= 1.
  explicit ManifoldModel(std::vector<int> factors);
  /// CP^{lambda_1} x ... x CP^{lambda_l}.
  static ManifoldModel from_partition(const Partition& lambda);

  std::span<const int> factors() const noexcept { return factors_; }
  int complex_dimension() const noexcept { return dimension_; }
  /// Factor dimensions as a partition (sorted descending).
  Partition shape() const { return Partition(factors_); }
  /// "CP2*CP1^2": factors sorted descending, repeats written as powers.
  std::string canonical_name() const;

  friend bool operator==(const ManifoldModel&, const ManifoldModel&) = default;

 private:
  std::vector<int> factors_;
  int dimension_ = 0;
};

std::string manifold_name(const Partition& shape);

namespace detail {

// Mixed-radix layout of Q[x_1..x_k]/(x_i^{n_i+1}): index = sum a_i * stride_i.
struct RingLayout {
  explicit RingLayout(const ManifoldModel& m);

  ManifoldModel model;
  std::vector<std::size_t> strides;
  std::size_t size = 1;
  std::vector<int> exponents;  // size * k, row per index
  std::vector<int> degrees;    // total degree per index

  std::span<const int> exponents_of(std::size_t index) const {
    const std::size_t k = model.factors().size();
    return {exponents.data() + index * k, k};
  }
  std::size_t index_of(std::span<const int> exps) const;
};

}  // namespace detail

/// Element of the truncated cohomology ring of a CP-product, stored densely
/// over all multi-exponents 0 <= a_i <= n_i.
template <class Coeff>
class TruncatedPolynomial {
 public:
  explicit TruncatedPolynomial(const ManifoldModel& m)
      : TruncatedPolynomial(std::make_shared<const detail::RingLayout>(m)) {}

  static TruncatedPolynomial one(const ManifoldModel& m) {
    TruncatedPolynomial p(m);
    p.coeffs_[0] = Coeff(1);
    return p;
  }

  /// The generator x_i (hyperplane class of the i-th factor).
  static TruncatedPolynomial generator(const ManifoldModel& m, std::size_t i) {
    TruncatedPolynomial p(m);
    p.coeffs_[p.layout_->strides.at(i)] = Coeff(1);
    return p;
  }

  const ManifoldModel& model() const noexcept { return layout_->model; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  const Coeff& coefficient(std::span<const int> exps) const { return coeffs_[layout_->index_of(exps)]; }
  void set_coefficient(std::span<const int> exps, Coeff value) { coeffs_[layout_->index_of(exps)] = std::move(value); }

  /// Coefficient of x_1^{n_1} ... x_k^{n_k}, i.e. pairing with the fundamental class.
  const Coeff& top_coefficient() const noexcept { return coeffs_.back(); }

  TruncatedPolynomial graded_piece(int degree) const {
    TruncatedPolynomial out(layout_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (layout_->degrees[i] == degree) out.coeffs_[i] = coeffs_[i];
    }
    return out;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c == 0; });
  }

  TruncatedPolynomial& operator+=(const TruncatedPolynomial& other) {
    check_same_ring(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  TruncatedPolynomial& operator-=(const TruncatedPolynomial& other) {
    check_same_ring(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
  }
  TruncatedPolynomial& operator*=(const Coeff& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }

  friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a += b; }
  friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a -= b; }
  friend TruncatedPolynomial operator*(TruncatedPolynomial a, const Coeff& s) { return a *= s; }

  friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    a.check_same_ring(b);
    const auto& layout = *a.layout_;
    const auto bounds = layout.model.factors();
    TruncatedPolynomial out(a.layout_);
    const auto nonzero_a = a.support();
    const auto nonzero_b = b.support();
    for (std::size_t i : nonzero_a) {
      const auto ea = layout.exponents_of(i);
      for (std::size_t j : nonzero_b) {
        const auto eb = layout.exponents_of(j);
        bool fits = true;
        for (std::size_t f = 0; f < bounds.size() && fits; ++f) fits = ea[f] + eb[f] <= bounds[f];
        if (fits) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  friend bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    return a.model() == b.model() && a.coeffs_ == b.coeffs_;
  }

 private:
  explicit TruncatedPolynomial(std::shared_ptr<const detail::RingLayout> layout)
      : layout_(std::move(layout)), coeffs_(layout_->size) {}

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) out.push_back(i);
    }
    return out;
  }

  void check_same_ring(const TruncatedPolynomial& other) const {
    if (!(model() == other.model())) throw PreconditionError("ring elements belong to different manifolds");
  }

  std::shared_ptr<const detail::RingLayout> layout_;
  std::vector<Coeff> coeffs_;
};

/// H^*(M; Q) for a CP-product M.
using RingElement = TruncatedPolynomial<Rational>;

/// c(TM) = prod_i (1 + x_i)^{n_i + 1}; its degree-j graded piece is c_j(TM).
RingElement total_chern_class(const ManifoldModel& m);

/// <c_{lambda_1}(TM) ... c_{lambda_l}(TM), [M]>. Throws DegreeMismatchError
/// unless weight(lambda) equals the complex dimension.
Integer chern_number(const ManifoldModel& m, const Partition& lambda);

/// Every Chern number of M, keyed by partitions of its complex dimension.
PartitionMap chern_numbers(const ManifoldModel& m);

/// Sum of coeff_lambda * numbers[lambda]. Throws PreconditionError when a needed
/// Chern number is missing.
Integer evaluate(const ChernPolynomial& p, const PartitionMap& numbers);

/// <s_omega(c_1(TM), ..., c_d(TM)), [M]>.
Integer s_number(const ManifoldModel& m, const Partition& omega);

Integer euler_characteristic(const ManifoldModel& m);

}  // namespace cobsec
