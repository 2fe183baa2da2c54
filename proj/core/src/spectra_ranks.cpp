#include "cobsec/spectra_ranks.hpp"

#include "cobsec/errors.hpp"
#include "cobsec/obstruction.hpp"
#include "cobsec/partitions.hpp"

namespace cobsec {

std::string to_string(Spectrum s) {
  switch (s) {
    case Spectrum::mtu:
      return "MTU";
    case Spectrum::mtu_relative:
      return "MTUrel";
    case Spectrum::mtu_bar:
      return "MTUbar";
  }
  return "unknown";
}

std::int64_t rank_mtu(int d, int q) {
  if (d < 1 || q < 0) throw PreconditionError("rank_mtu needs d >= 1, q >= 0");
  return count_constrained(q, d, std::nullopt);
}

std::int64_t rank_mtu_relative(int d, int r, int q) {
  if (r < 1 || r > d || q < 0) throw PreconditionError("rank_mtu_relative needs 1 <= r <= d, q >= 0");
  return count_constrained(q, d, d - r + 1);
}

std::int64_t rank_mtu_bar(int d, int q) {
  if (d < 0 || q < 0) throw PreconditionError("rank_mtu_bar needs d >= 0, q >= 0");
  return count_constrained(q, std::nullopt, d + 1);
}

std::int64_t rank_in_degree(Spectrum s, int d, int r, int n) {
  if (n < 0) throw PreconditionError("cohomological degree must be >= 0");
  if (n % 2 != 0) return 0;
  switch (s) {
    case Spectrum::mtu:
      return rank_mtu(d, n / 2);
    case Spectrum::mtu_relative:
      return rank_mtu_relative(d, r, n / 2);
    case Spectrum::mtu_bar:
      return rank_mtu_bar(d, n / 2);
  }
  return 0;
}

RankTable rank_table(Spectrum s, int d, int r, int q_min, int q_max) {
  if (q_min < 0 || q_max < q_min) throw PreconditionError("invalid degree range");
  RankTable table{s, d, r, {}};
  for (int q = q_min; q <= q_max; ++q) table.ranks.emplace_back(2 * q, rank_in_degree(s, d, r, 2 * q));
  return table;
}

SplittingCheck splitting_check(int d, int r, int max_degree) {
  if (r < 0 || r > d) throw PreconditionError("splitting check needs 0 <= r <= d");
  SplittingCheck check;
  // Parts <= d - r; for r = d this is MTU(0), with nothing in positive degree.
  check.i = count_constrained(d, d - r, std::nullopt);
  check.j = rank_mtu_bar(d - r, d);
  check.p = partition_count(d);
  for (const auto& omega : enumerate(d)) {
    if (omega.length() > d - r) ++check.long_partitions;
  }
  check.kernel_dimension = static_cast<std::int64_t>(kernel_basis(d, r, max_degree).size());
  check.consistent = check.i + check.j == check.p && check.j == check.long_partitions &&
                     check.i == check.kernel_dimension;
  return check;
}

bool stabilization_check(int d, int r, int k, int q_max) {
  if (q_max > d) throw PreconditionError("stabilization check needs q_max <= d");
  if (k < 0) throw PreconditionError("stabilization shift must be >= 0");
  for (int q = 0; q <= q_max; ++q) {
    if (rank_mtu_relative(d, r, q) != rank_mtu_relative(d + k, r + k, q)) return false;
  }
  return true;
}

}  // namespace cobsec
