#pragma once

#include "cobsec/chern_geometry.hpp"
#include "cobsec/linalg.hpp"
#include "cobsec/numeric.hpp"
#include "cobsec/partitions.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cobsec {

inline constexpr int kDefaultMaxDegree = 10;

using RationalPartitionMap = std::map<Partition, Rational, ReverseLex>;

/// A rational combination of CP-product classes in complex dimension d:
/// sum of q_lambda [CP^{lambda_1} x ... x CP^{lambda_l}].
class CobordismClass {
 public:
  explicit CobordismClass(int degree = 1);
  /// The basis class [CP^lambda], degree weight(lambda).
  static CobordismClass basis(const Partition& lambda);

  int degree() const noexcept { return degree_; }
  const RationalPartitionMap& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_.empty(); }
  bool has_integer_coords() const;
  Rational coefficient(const Partition& lambda) const;

  /// Throws DegreeMismatchError if weight(lambda) != degree().
  void add_term(const Partition& lambda, const Rational& coeff);

  CobordismClass& operator+=(const CobordismClass& other);
  CobordismClass& operator*=(const Rational& scalar);
  friend CobordismClass operator+(CobordismClass a, const CobordismClass& b) { return a += b; }
  friend CobordismClass operator*(const Rational& s, CobordismClass a) { return a *= s; }
  friend CobordismClass operator-(CobordismClass a, const CobordismClass& b) { return a += Rational(-1) * b; }

  friend bool operator==(const CobordismClass&, const CobordismClass&) = default;

 private:
  int degree_;
  RationalPartitionMap coords_;
};

/// "4*CP2 - 3*CP1^2"; the zero class of degree d prints as "0*CPd".
std::string to_string(const CobordismClass& x);

/// s_matrix(d)(omega, lambda) = s_omega(CP^lambda), rows and columns in enumerate(d) order.
struct SMatrix {
  int degree = 0;
  std::vector<Partition> index;
  Matrix<Integer> entries;
  Integer determinant;

  std::size_t position(const Partition& p) const;
};

/// Memoized and safe to call concurrently. Throws ResourceGuardError unless
/// 1 <= d <= max_degree.
std::shared_ptr<const SMatrix> s_matrix(int d, int max_degree = kDefaultMaxDegree);

struct StongVerdict {
  bool is_basis = false;
  Integer determinant;
};

/// Whether {s_omega : omega |- d} separates the CP-product basis (det != 0).
StongVerdict verify_stong(int d, int max_degree = kDefaultMaxDegree);

/// omega -> s_omega(X) for every omega |- deg X.
RationalPartitionMap s_coordinates(const CobordismClass& x, int max_degree = kDefaultMaxDegree);

/// s_d(X) != 0.
bool is_rational_generator(const CobordismClass& x, int max_degree = kDefaultMaxDegree);

enum class GeneratorVerdict { generator, not_generator, not_applicable };

std::string to_string(GeneratorVerdict v);

struct PrimePower {
  Integer prime;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// All (p, q), p prime and q >= 1, with p^q = n.
std::vector<PrimePower> prime_power_decompositions(const Integer& n);

struct GeneratorCheck {
  GeneratorVerdict verdict = GeneratorVerdict::not_applicable;
  int degree = 0;
  Integer s_top;                        // s_d(X)
  std::vector<PrimePower> prime_powers;  // solutions of d = p^q - 1
  bool ambiguous = false;               // more than one solution
  std::string caveat;
};

/// Integral multiplicative-generator criterion applied to s_d(X): +-p when
/// d = p^q - 1, +-1 otherwise. not_applicable for the zero class.
/// Throws PreconditionError if X has non-integer coordinates.
GeneratorCheck integral_generator_check(const CobordismClass& x, int max_degree = kDefaultMaxDegree);

struct SectionGenerator {
  CobordismClass cls;
  Integer clearing_constant;  // s_d(cls); also the lcm of the solution's denominators
};

/// Integer class X with s_d(X) = c != 0 and s_omega(X) = 0 for every other omega |- d.
/// Requires 1 <= r < d.
SectionGenerator construct_section_generator(int d, int r, int max_degree = kDefaultMaxDegree);

}  // namespace cobsec
