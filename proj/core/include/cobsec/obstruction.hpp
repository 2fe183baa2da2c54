#pragma once

#include "cobsec/cobordism_algebra.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cobsec {

struct ObstructionEntry {
  Partition omega;
  Rational value;

  friend bool operator==(const ObstructionEntry&, const ObstructionEntry&) = default;
};

/// The rational obstruction to r independent complex sections, represented by
/// its complete set of invariants s_omega(X) for l(omega) > d - r.
struct ObstructionReport {
  int degree = 0;
  int sections = 0;
  std::vector<ObstructionEntry> entries;  // canonical order
  bool vanishes = true;
  std::optional<ObstructionEntry> witness;  // first nonzero entry
};

/// Throws PreconditionError unless 0 <= r <= deg X.
ObstructionReport gamma_rational(const CobordismClass& x, int r, int max_degree = kDefaultMaxDegree);

/// Same report for a raw Chern-number vector lambda -> c_lambda[M] of a
/// 2d-manifold outside the CP-product span; every lambda |- d must be present.
ObstructionReport gamma_rational_from_chern_numbers(int d, const RationalPartitionMap& chern_numbers, int r);

bool admits_sections_rationally(const CobordismClass& x, int r, int max_degree = kDefaultMaxDegree);

/// Basis of {X : s_omega(X) = 0 for all l(omega) > d - r}, each with primitive
/// integer coordinates and positive leading coefficient.
std::vector<CobordismClass> kernel_basis(int d, int r, int max_degree = kDefaultMaxDegree);

}  // namespace cobsec
