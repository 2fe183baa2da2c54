#pragma once

#include "cobsec/linalg.hpp"
#include "cobsec/numeric.hpp"
#include "cobsec/partitions.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cobsec {

using PartitionMap = std::map<Partition, Integer, ReverseLex>;

/// Coordinates of a homogeneous symmetric function in the monomial basis {m_mu}.
struct MonomialSymVector {
  int degree = 0;
  PartitionMap coeffs;

  friend bool operator==(const MonomialSymVector&, const MonomialSymVector&) = default;
};

/// Homogeneous integer polynomial in Chern classes c_1, c_2, ... where c_i has
/// degree i. The key lambda stands for the monomial c_{lambda_1} c_{lambda_2} ...
class ChernPolynomial {
 public:
  explicit ChernPolynomial(int degree = 0) : degree_(degree) {}

  int degree() const noexcept { return degree_; }
  const PartitionMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Partition& monomial) const;

  /// Adds coeff * c_monomial; zero results are erased. Throws DegreeMismatchError.
  void add_term(const Partition& monomial, const Integer& coeff);

  friend bool operator==(const ChernPolynomial&, const ChernPolynomial&) = default;

 private:
  int degree_;
  PartitionMap terms_;
};

/// Expansion of e_lambda = e_{lambda_1} e_{lambda_2} ... in the monomial basis,
/// computed with weight(lambda) variables.
MonomialSymVector elementary_in_monomial(const Partition& lambda);

/// Per-degree change of basis between {e_lambda} and {m_mu}, both indexed by
/// enumerate(d). elementary_in_monomial(mu, lambda) is the m_mu coefficient of
/// e_lambda; monomial_in_elementary is its inverse, which is integral.
struct TransitionTable {
  int degree = 0;
  std::vector<Partition> basis;
  Matrix<Integer> elementary_in_monomial;
  Matrix<Integer> monomial_in_elementary;
};

/// Memoized; safe to call concurrently. Throws PreconditionError for d < 1.
std::shared_ptr<const TransitionTable> transition_table(int d);

/// The polynomial s_omega with s_omega(e_1, ..., e_d) = m_omega, d = weight(omega) >= 1.
ChernPolynomial s_polynomial(const Partition& omega);

/// Deletes every term containing a factor c_k with k >= n. Throws PreconditionError for n < 1.
ChernPolynomial truncate_classes(const ChernPolynomial& p, int n);

/// "c1^2 - 2*c2": terms from longest monomial to shortest, factors by increasing index.
std::string to_string(const ChernPolynomial& p);

}  // namespace cobsec
