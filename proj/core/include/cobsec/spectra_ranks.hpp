#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cobsec {

// Rational cohomology ranks of the Thom spectra MTU(d), MTU(d,r) and the
// quotient MTUbar(d). All three are torsion-free and concentrated in even
// degrees; H^{2q} ranks are counts of degree-2q monomials in Chern classes,
// i.e. partition counts. For spectra of finite type these are also the ranks
// of the rational homotopy groups, which is how the functions below are used.

enum class Spectrum { mtu, mtu_relative, mtu_bar };

std::string to_string(Spectrum s);

/// H^{2q}(MTU(d)): partitions of q with parts <= d.
std::int64_t rank_mtu(int d, int q);

/// H^{2q}(MTU(d,r)): partitions of q with parts <= d and largest part >= d - r + 1.
std::int64_t rank_mtu_relative(int d, int r, int q);

/// H^{2q}(MTUbar(d)): partitions of q with largest part >= d + 1.
std::int64_t rank_mtu_bar(int d, int q);

/// Rank in an arbitrary cohomological degree n; zero for odd n.
/// `r` is ignored except for Spectrum::mtu_relative.
std::int64_t rank_in_degree(Spectrum s, int d, int r, int n);

struct RankTable {
  Spectrum spectrum = Spectrum::mtu;
  int d = 0;
  int r = 0;
  std::vector<std::pair<int, std::int64_t>> ranks;  // (degree 2q, rank)
};

RankTable rank_table(Spectrum s, int d, int r, int q_min, int q_max);

struct SplittingCheck {
  std::int64_t i = 0;  // rank of pi_{2d} MTU(d-r) (mod torsion)
  std::int64_t j = 0;  // rank of pi_{2d} MTUbar(d-r)
  std::int64_t p = 0;  // p(d)
  std::int64_t long_partitions = 0;  // #{omega |- d : l(omega) > d - r}
  std::int64_t kernel_dimension = 0;
  bool consistent = false;
};

/// Requires 0 <= r <= d. Computes the obstruction kernel, so d is subject to
/// the usual s-matrix degree guard.
SplittingCheck splitting_check(int d, int r, int max_degree = 10);

/// rank_mtu_relative(d, r, q) == rank_mtu_relative(d + k, r + k, q) for all q <= q_max.
/// Requires q_max <= d.
bool stabilization_check(int d, int r, int k, int q_max);

}  // namespace cobsec
