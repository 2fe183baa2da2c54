#include "cobsec/spectra_ranks.hpp"

#include "cobsec/errors.hpp"
#include "cobsec/partitions.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace cobsec {
namespace {

std::int64_t brute(int q, auto&& keep) {
  const auto all = enumerate(q);
  return std::count_if(all.begin(), all.end(), keep);
}

TEST(RankMtuTest, Examples) {
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(rank_mtu(d, 0), 1);
  EXPECT_EQ(rank_mtu(2, 3), 2);
  for (int q = 0; q <= 10; ++q) {
    for (int d = q; d <= q + 2; ++d) {
      if (d >= 1) EXPECT_EQ(rank_mtu(d, q), partition_count(q));
    }
  }
  const auto table = rank_table(Spectrum::mtu, 2, 0, 0, 4);
  std::vector<std::int64_t> ranks;
  for (const auto& [degree, rank] : table.ranks) ranks.push_back(rank);
  EXPECT_EQ(ranks, (std::vector<std::int64_t>{1, 1, 2, 2, 3}));
  EXPECT_EQ(table.ranks.back().first, 8);
}

TEST(RankMtuTest, MatchesEnumeration) {
  for (int d = 1; d <= 8; ++d) {
    for (int q = 0; q <= 10; ++q) {
      EXPECT_EQ(rank_mtu(d, q), brute(q, [&](const Partition& p) { return p.max_part() <= d; }));
      EXPECT_EQ(rank_mtu_bar(d, q), brute(q, [&](const Partition& p) { return p.max_part() >= d + 1; }));
      for (int r = 1; r <= d; ++r) {
        EXPECT_EQ(rank_mtu_relative(d, r, q),
                  brute(q, [&](const Partition& p) { return p.max_part() <= d && p.max_part() >= d - r + 1; }));
      }
    }
  }
}

TEST(RankMtuRelativeTest, Examples) {
  EXPECT_EQ(rank_mtu_relative(3, 1, 3), 1);
  for (int d = 1; d <= 10; ++d) {
    for (int r = 1; r <= d; ++r) {
      for (int q = 0; q <= d - r; ++q) EXPECT_EQ(rank_mtu_relative(d, r, q), 0);
      EXPECT_GT(rank_mtu_relative(d, r, d - r + 1), 0);
    }
  }
  EXPECT_THROW(rank_mtu_relative(3, 0, 1), PreconditionError);
  EXPECT_THROW(rank_mtu_relative(3, 4, 1), PreconditionError);
}

TEST(RankMtuRelativeTest, ExactSequenceShadow) {
  for (int d = 1; d <= 10; ++d) {
    for (int r = 1; r < d; ++r) {
      for (int q = 0; q <= 12; ++q) EXPECT_EQ(rank_mtu_relative(d, r, q), rank_mtu(d, q) - rank_mtu(d - r, q));
    }
  }
}

TEST(RankMtuBarTest, Examples) {
  EXPECT_EQ(rank_mtu_bar(2, 3), 1);
  for (int q = 1; q <= 10; ++q) EXPECT_EQ(rank_mtu_bar(0, q), partition_count(q));
  for (int d = 0; d <= 6; ++d) {
    for (int q = 0; q <= d; ++q) EXPECT_EQ(rank_mtu_bar(d, q), 0);
  }
  // Stable value of the relative ranks.
  for (int d = 0; d <= 5; ++d) {
    for (int q = 0; q <= 8; ++q) EXPECT_EQ(rank_mtu_bar(d, q), rank_mtu_relative(d + 10, 10, q));
  }
}

TEST(RankInDegreeTest, OddDegreesVanish) {
  for (int d = 1; d <= 6; ++d) {
    for (int n = 1; n <= 21; n += 2) {
      EXPECT_EQ(rank_in_degree(Spectrum::mtu, d, 0, n), 0);
      EXPECT_EQ(rank_in_degree(Spectrum::mtu_relative, d, 1, n), 0);
      EXPECT_EQ(rank_in_degree(Spectrum::mtu_bar, d, 0, n), 0);
    }
    EXPECT_EQ(rank_in_degree(Spectrum::mtu, d, 0, 6), rank_mtu(d, 3));
  }
}

TEST(SplittingCheckTest, Examples) {
  const auto s31 = splitting_check(3, 1);
  EXPECT_EQ(s31.i, 2);
  EXPECT_EQ(s31.j, 1);
  EXPECT_EQ(s31.p, 3);
  EXPECT_TRUE(s31.consistent);

  const auto s30 = splitting_check(3, 0);
  EXPECT_EQ(s30.i, 3);
  EXPECT_EQ(s30.j, 0);
  EXPECT_TRUE(s30.consistent);

  const auto s42 = splitting_check(4, 2);
  EXPECT_EQ(s42.i, 3);
  EXPECT_EQ(s42.j, 2);
  EXPECT_EQ(s42.p, 5);
  EXPECT_TRUE(s42.consistent);

  EXPECT_THROW(splitting_check(3, 4), PreconditionError);
}

TEST(SplittingCheckTest, ThreeRoutesToJAgree) {
  for (int d = 1; d <= 8; ++d) {
    for (int r = 0; r <= d; ++r) {
      const auto s = splitting_check(d, r);
      EXPECT_TRUE(s.consistent) << d << " " << r;
      EXPECT_EQ(s.j, s.long_partitions);
      EXPECT_EQ(s.j, s.p - s.i);
    }
  }
}

TEST(StabilizationCheckTest, Examples) {
  EXPECT_TRUE(stabilization_check(4, 1, 3, 4));
  EXPECT_TRUE(stabilization_check(5, 2, 0, 5));
  for (int d = 1; d <= 8; ++d) {
    for (int r = 1; r <= d; ++r) {
      for (int k = 0; k <= 4; ++k) EXPECT_TRUE(stabilization_check(d, r, k, d));
    }
  }
  EXPECT_THROW(stabilization_check(3, 1, 1, 4), PreconditionError);
  // Beyond the stable range the ranks do move.
  EXPECT_NE(rank_mtu_relative(2, 1, 4), rank_mtu_relative(3, 2, 4));
}

}  // namespace
}  // namespace cobsec
