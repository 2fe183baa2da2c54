#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cobsec {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Parts are sorted on construction, so any ordering of the same multiset
/// yields the same value. Ordering is lexicographic on the parts; the
/// library's canonical order is the reverse of it, i.e. (d) first and
/// (1,...,1) last (see ReverseLex).
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if any part is not positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// The partition (1,...,1) of n.
  static Partition ones(int n);

  std::span<const int> parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// Largest part, 0 for the empty partition.
  int max_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Number of parts equal to k.
  int multiplicity(int k) const noexcept;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Comparator for the canonical (reverse-lexicographic) order.
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// All partitions of d in canonical order; (d) first, (1,...,1) last.
std::vector<Partition> enumerate(int d);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

/// Number of partitions of d (via the counting recurrence, not enumeration).
std::int64_t partition_count(int d);

/// Number of partitions of d whose largest part lies in [min_max_part, max_part].
/// Absent bounds do not constrain; contradictory bounds give 0.
std::int64_t count_constrained(int d, std::optional<int> max_part, std::optional<int> min_max_part);

/// "[2,1]"; the empty partition prints as "[]".
std::string to_string(const Partition& p);

/// Inverse of to_string; parts may be given in any order. Throws std::invalid_argument.
Partition parse_partition(std::string_view text);

}  // namespace cobsec

template <>
struct std::hash<cobsec::Partition> {
  std::size_t operator()(const cobsec::Partition& p) const noexcept {
    std::size_t h = 0;
    for (int part : p.parts()) h = h * 1000003u ^ static_cast<std::size_t>(part);
    return h;
  }
};
