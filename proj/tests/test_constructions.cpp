#include <gtest/gtest.h>

#include "cycposet/cycposet.hpp"
#include "oracles.hpp"

using namespace cycposet;

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(12).factors, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factorize(1).factors.empty());
  EXPECT_EQ(factorize(360).factors, (std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_THROW(factorize(0), DomainError);
}

TEST(Factorize, ProductAndPrimality) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto f = factorize(n);
    std::uint64_t prod = 1;
    std::uint64_t last = 0;
    for (const auto& pp : f.factors) {
      EXPECT_TRUE(is_prime(pp.prime));
      EXPECT_GT(pp.prime, last);
      EXPECT_GE(pp.exponent, 1u);
      last = pp.prime;
      prod *= pp.value();
    }
    EXPECT_EQ(prod, n);
    EXPECT_EQ(f.value, n);
  }
}

TEST(ExactlyDivides, Examples) {
  EXPECT_TRUE(exactly_divides(2, 1, 6));
  EXPECT_FALSE(exactly_divides(2, 1, 12));
  EXPECT_TRUE(exactly_divides(3, 1, 12));
  EXPECT_TRUE(exactly_divides(4, 12));
  EXPECT_FALSE(exactly_divides(6, 12));
}

TEST(BValue, Examples) {
  EXPECT_EQ(b_value(1), 0u);
  EXPECT_EQ(b_value(2), 1u);
  for (std::uint64_t q : {3, 4, 5, 7}) EXPECT_EQ(b_value(q), 3u);
  for (std::uint64_t q : {8, 9, 25, 11, 13, 16, 27, 49}) EXPECT_EQ(b_value(q), 2u);
  EXPECT_THROW(b_value(6), DomainError);
  EXPECT_THROW(b_value(0), DomainError);
}

TEST(Beta, Examples) {
  EXPECT_EQ(beta(12), 20u);
  EXPECT_EQ(beta(6), 11u);
  EXPECT_EQ(beta(60), 35u);
  EXPECT_EQ(beta(1), 0u);
  EXPECT_EQ(beta(2), 2u);
  EXPECT_EQ(beta(8), 16u);
}

TEST(Beta, MatchesClosedFormOracle) {
  for (std::uint64_t n = 1; n <= 2000; ++n) EXPECT_EQ(beta(n), oracle_ref::beta(n)) << n;
}

TEST(Frucht, Examples) {
  EXPECT_EQ(frucht_poset(3).size(), 9u);
  EXPECT_TRUE(is_cyclic_aut_of_order(frucht_poset(3), 3));
  EXPECT_EQ(frucht_poset(5).size(), 15u);
  EXPECT_TRUE(is_cyclic_aut_of_order(frucht_poset(5), 5));
  EXPECT_EQ(frucht_poset(4).size(), 12u);
  EXPECT_TRUE(is_cyclic_aut_of_order(frucht_poset(4), 4));
  EXPECT_THROW(frucht_poset(2), DomainError);
}

TEST(Frucht, LabellingAndGeneratingRelations) {
  const auto p = frucht_poset(4);
  EXPECT_EQ(p.label(3 * 2 + 1), "(2,1)");
  for (Point i = 0; i < 4; ++i) {
    EXPECT_TRUE(p.less(3 * i, 3 * i + 1));
    EXPECT_TRUE(p.less(3 * i + 1, 3 * i + 2));
    EXPECT_TRUE(p.less(3 * i, 3 * ((i + 1) % 4) + 2));
  }
  EXPECT_EQ(p.comparabilities(), 4u * 4u);
}

TEST(Circulant, Examples) {
  const auto p8 = circulant_two_level(8, {0, 1, 2, 4});
  EXPECT_EQ(p8.size(), 16u);
  EXPECT_TRUE(is_cyclic_aut_of_order(p8, 8));
  const auto p9 = circulant_two_level(9, {0, 1, 2, 4});
  EXPECT_EQ(p9.size(), 18u);
  EXPECT_TRUE(is_cyclic_aut_of_order(p9, 9));
  const auto p3 = circulant_two_level(3, {0});
  EXPECT_EQ(p3.comparabilities(), 3u);
  EXPECT_EQ(automorphism_group(p3).order, 6);
  EXPECT_EQ(oracle_ref::all_automorphisms(oracle_ref::to_matrix(p3)).size(), 6u);
}

TEST(Circulant, RelationMatchesDifferenceSet) {
  const std::vector<std::size_t> S{0, 2, 3};
  const auto p = circulant_two_level(7, S);
  for (Point i = 0; i < 7; ++i)
    for (Point j = 0; j < 7; ++j) {
      const auto d = (j + 7 - i) % 7;
      EXPECT_EQ(p.less(i, 7 + j), d == 0 || d == 2 || d == 3);
      EXPECT_FALSE(p.less(i, j));
      EXPECT_FALSE(p.less(7 + i, 7 + j));
      EXPECT_FALSE(p.less(7 + j, i));
    }
}

TEST(PrimePowerPoset, Examples) {
  EXPECT_EQ(prime_power_poset(2, 1).size(), 2u);
  EXPECT_EQ(automorphism_group(prime_power_poset(2, 1)).order, 2);
  EXPECT_EQ(prime_power_poset(2, 3).size(), 16u);
  EXPECT_TRUE(is_cyclic_aut_of_order(prime_power_poset(2, 3), 8));
  EXPECT_EQ(prime_power_poset(3, 2).size(), 18u);
  EXPECT_TRUE(is_cyclic_aut_of_order(prime_power_poset(3, 2), 9));
  EXPECT_EQ(prime_power_poset(5, 0).size(), 0u);
  EXPECT_THROW(prime_power_poset(6, 1), DomainError);
  EXPECT_THROW(prime_power_poset(257, 1), CapacityError);
}

TEST(PrimePowerPoset, AllPrimePowersUpTo64) {
  for (std::uint64_t q = 2; q <= 64; ++q) {
    if (!is_prime_power(q)) continue;
    const auto f = factorize(q).factors.front();
    const auto p = prime_power_poset(f.prime, f.exponent);
    EXPECT_EQ(p.size(), b_value(q) * q) << q;
    EXPECT_TRUE(is_cyclic_aut_of_order(p, q)) << q;
  }
}

TEST(Z12, Structure) {
  const auto p = z12_poset();
  EXPECT_EQ(p.size(), 20u);
  EXPECT_EQ(p.label(16), "0'''");
  EXPECT_TRUE(p.less(0, 6));
  EXPECT_TRUE(p.less(0, 7));
  EXPECT_TRUE(p.less(0, 9));
  EXPECT_FALSE(p.less(0, 8));
  EXPECT_TRUE(p.less(12, 16));
  EXPECT_TRUE(p.less(12, 17));
  EXPECT_FALSE(p.less(12, 18));
  EXPECT_TRUE(p.less(12, 0));
  EXPECT_FALSE(p.less(12, 1));
  for (Point i = 12; i < 16; ++i)
    for (Point j = 6; j < 12; ++j) EXPECT_TRUE(p.less(i, j));
}

TEST(MinimalPoset, Examples) {
  EXPECT_EQ(minimal_poset(12), z12_poset());
  EXPECT_EQ(minimal_poset(6), ordinal_sum({antichain(2), frucht_poset(3)}));
  EXPECT_EQ(minimal_poset(6).size(), 11u);
  EXPECT_TRUE(is_cyclic_aut_of_order(minimal_poset(6), 6));
  EXPECT_EQ(minimal_poset(1).size(), 0u);
  EXPECT_EQ(minimal_poset(40).size(), 31u);
  EXPECT_TRUE(is_cyclic_aut_of_order(minimal_poset(40), 40));
  EXPECT_EQ(minimal_poset(60), ordinal_sum({z12_poset(), frucht_poset(5)}));
}

TEST(MinimalPoset, SizeEqualsBetaUpTo200) {
  for (std::uint64_t n = 1; n <= 200; ++n) EXPECT_EQ(minimal_poset(n).size(), beta(n)) << n;
}

TEST(MinimalPoset, CyclicOfOrderNUpTo60) {
  for (std::uint64_t n = 1; n <= 60; ++n) EXPECT_TRUE(is_cyclic_aut_of_order(minimal_poset(n), n)) << n;
}
