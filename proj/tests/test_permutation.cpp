#include <gtest/gtest.h>

#include <random>

#include "cycposet/permutation.hpp"
#include "oracles.hpp"

using namespace cycposet;

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), DomainError);
  EXPECT_THROW(Permutation({0, 3, 1}), DomainError);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  const Permutation a({1, 2, 0});
  const Permutation b({1, 0, 2});
  const auto ab = a * b;
  for (Point x = 0; x < 3; ++x) EXPECT_EQ(ab(x), a(b(x)));
  EXPECT_THROW(a * Permutation::identity(4), LengthMismatch);
}

TEST(Permutation, InverseAndCycles) {
  const auto s = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
  EXPECT_TRUE((s * s.inverse()).is_identity());
  EXPECT_EQ(s.cycles().size(), 2u);
  EXPECT_THROW(Permutation::from_cycles(3, {{0, 5}}), IndexError);
}

TEST(CycleType, IdentityHasOnlyFixedPoints) {
  const auto ct = cycle_type(Permutation::identity(4));
  EXPECT_TRUE(ct.lengths.empty());
  EXPECT_EQ(ct.fixed, 4u);
  EXPECT_EQ(perm_order(Permutation::identity(4)), 1u);
}

TEST(CycleType, SquareOfFourCycle) {
  const auto s = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  EXPECT_EQ(cycle_type(perm_power(s, 2)), CycleType::from_lengths({2, 2}));
}

TEST(CycleType, FourthPowerOfSixCycle) {
  const auto s = Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}});
  const auto s4 = perm_power(s, 4);
  EXPECT_EQ(s4, s * s * s * s);
  EXPECT_EQ(cycle_type(s4), CycleType::from_lengths({3, 3}));
}

TEST(CycleType, RejectsShortLengths) {
  EXPECT_THROW(CycleType::from_lengths({3, 1}), DomainError);
  EXPECT_EQ(CycleType::from_lengths({4, 6, 4, 6}).to_string(), "{6,6,4,4}");
}

TEST(PermutationProperty, LengthsAndFixedPointsCoverTheDomain) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 20;
    const auto s = oracle_ref::random_permutation(n, rng);
    const auto ct = cycle_type(s);
    EXPECT_EQ(ct.points(), n);
    for (auto l : ct.lengths) EXPECT_GE(l, 2u);
    // The order is the least m >= 1 with s^m = id.
    std::uint64_t m = 1;
    auto pw = s;
    while (!pw.is_identity()) {
      pw = s * pw;
      ++m;
    }
    EXPECT_EQ(perm_order(s), m);
  }
}

TEST(PermutationProperty, PowerMatchesRepeatedComposition) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto s = oracle_ref::random_permutation(1 + rng() % 12, rng);
    auto acc = Permutation::identity(s.size());
    for (int m = 0; m <= 7; ++m) {
      EXPECT_EQ(perm_power(s, m), acc);
      EXPECT_EQ(perm_power(s, -m), acc.inverse());
      acc = s * acc;
    }
  }
}
