#include "cobsec/symmetric_functions.hpp"

#include "cobsec/errors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <thread>

namespace cobsec {
namespace {

ChernPolynomial poly(int degree, std::initializer_list<std::pair<Partition, int>> terms) {
  ChernPolynomial p(degree);
  for (const auto& [monomial, coeff] : terms) p.add_term(monomial, coeff);
  return p;
}

TEST(ElementaryInMonomialTest, Examples) {
  EXPECT_EQ(elementary_in_monomial(Partition{2}).coeffs, (PartitionMap{{Partition{1, 1}, 1}}));
  EXPECT_EQ(elementary_in_monomial(Partition{2, 1}).coeffs, (PartitionMap{{Partition{2, 1}, 1}, {Partition{1, 1, 1}, 3}}));
  // e_1^3 = m_3 + 3 m_21 + 6 m_111, frozen from the explicit expansion in 3 variables.
  EXPECT_EQ(elementary_in_monomial(Partition{1, 1, 1}).coeffs,
            (PartitionMap{{Partition{3}, 1}, {Partition{2, 1}, 3}, {Partition{1, 1, 1}, 6}}));
  EXPECT_EQ(elementary_in_monomial(Partition{}).coeffs, (PartitionMap{{Partition{}, 1}}));
}

TEST(ElementaryInMonomialTest, MatchesExplicitExpansion) {
  for (int d = 1; d <= 6; ++d) {
    for (const auto& lambda : enumerate(d)) {
      const auto expansion = oracle::elementary_product(d, lambda);
      const auto ours = elementary_in_monomial(lambda);
      EXPECT_EQ(ours.degree, d);
      for (const auto& mu : enumerate(d)) {
        auto it = ours.coeffs.find(mu);
        const Integer got = it == ours.coeffs.end() ? Integer(0) : it->second;
        EXPECT_EQ(got, oracle::monomial_coefficient(expansion, d, mu)) << to_string(lambda) << " " << to_string(mu);
        EXPECT_GE(got, 0);
      }
    }
  }
}

TEST(SPolynomialTest, Examples) {
  EXPECT_EQ(s_polynomial(Partition{2}), poly(2, {{Partition{1, 1}, 1}, {Partition{2}, -2}}));
  EXPECT_EQ(s_polynomial(Partition{2, 1}), poly(3, {{Partition{2, 1}, 1}, {Partition{3}, -3}}));
  EXPECT_EQ(to_string(s_polynomial(Partition{2})), "c1^2 - 2*c2");
  EXPECT_EQ(to_string(s_polynomial(Partition{2, 1})), "c1*c2 - 3*c3");
  EXPECT_EQ(to_string(s_polynomial(Partition{1, 1, 1})), "c3");
  EXPECT_THROW(s_polynomial(Partition{}), PreconditionError);
}

TEST(SPolynomialTest, AllOnesIsTopChernClass) {
  for (int d = 1; d <= 10; ++d) {
    EXPECT_EQ(s_polynomial(Partition::ones(d)), poly(d, {{Partition{d}, 1}})) << d;
  }
}

TEST(SPolynomialTest, SingleRowIsNewtonPowerSum) {
  for (int d = 1; d <= 10; ++d) {
    const auto newton = oracle::newton_power_sum(d);
    const auto ours = s_polynomial(Partition{d});
    ASSERT_EQ(ours.terms().size(), newton.size()) << d;
    for (const auto& [monomial, coeff] : newton) EXPECT_EQ(ours.coefficient(monomial), coeff) << d;
  }
}

TEST(SPolynomialTest, SubstitutionReproducesMonomialSymmetricFunction) {
  for (int d = 1; d <= 6; ++d) {
    for (const auto& omega : enumerate(d)) {
      oracle::Poly sum;
      const auto polynomial = s_polynomial(omega);
      for (const auto& [lambda, coeff] : polynomial.terms()) {
        sum = oracle::add(sum, oracle::elementary_product(d, lambda), coeff);
      }
      EXPECT_EQ(sum, oracle::monomial_symmetric(d, omega)) << to_string(omega);
    }
  }
}

TEST(SPolynomialTest, LongPartitionsVanishUnderTruncation) {
  for (int d = 1; d <= 8; ++d) {
    for (int n = 1; n <= d; ++n) {
      for (const auto& omega : enumerate(d)) {
        if (omega.length() >= n) EXPECT_TRUE(truncate_classes(s_polynomial(omega), n).is_zero()) << to_string(omega);
      }
    }
  }
}

TEST(TruncateClassesTest, Examples) {
  const auto p = s_polynomial(Partition{2, 1});
  EXPECT_EQ(truncate_classes(p, 3), poly(3, {{Partition{2, 1}, 1}}));
  EXPECT_TRUE(truncate_classes(s_polynomial(Partition{1, 1, 1}), 3).is_zero());
  for (int d = 1; d <= 6; ++d) {
    for (const auto& omega : enumerate(d)) EXPECT_EQ(truncate_classes(s_polynomial(omega), d + 1), s_polynomial(omega));
  }
  EXPECT_THROW(truncate_classes(p, 0), PreconditionError);
}

TEST(ChernPolynomialTest, TextForm) {
  EXPECT_EQ(to_string(ChernPolynomial(3)), "0");
  EXPECT_EQ(to_string(poly(3, {{Partition{3}, -3}})), "-3*c3");
  EXPECT_EQ(to_string(poly(5, {{Partition{2, 2, 1}, 2}, {Partition{5}, 1}})), "2*c1*c2^2 + c5");
}

TEST(ChernPolynomialTest, RejectsInhomogeneousTerms) {
  ChernPolynomial p(2);
  EXPECT_THROW(p.add_term(Partition{3}, 1), DegreeMismatchError);
  p.add_term(Partition{2}, 1);
  p.add_term(Partition{2}, -1);
  EXPECT_TRUE(p.is_zero());
}

TEST(TransitionTableTest, InverseIsIntegral) {
  for (int d = 1; d <= 8; ++d) {
    const auto t = transition_table(d);
    const std::size_t n = t->basis.size();
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Integer sum = 0;
        for (std::size_t k = 0; k < n; ++k) sum += t->elementary_in_monomial(r, k) * t->monomial_in_elementary(k, c);
        EXPECT_EQ(sum, r == c ? 1 : 0);
      }
    }
  }
}

TEST(TransitionTableTest, ConcurrentCallersAgree) {
  std::vector<std::shared_ptr<const TransitionTable>> seen(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i) threads.emplace_back([&seen, i] { seen[i] = transition_table(9); });
  for (auto& t : threads) t.join();
  for (const auto& s : seen) EXPECT_EQ(s->monomial_in_elementary, seen.front()->monomial_in_elementary);
}

}  // namespace
}  // namespace cobsec
