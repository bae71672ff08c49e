#include <gtest/gtest.h>

#include "cycposet/cycposet.hpp"

using namespace cycposet;
using namespace cycposet::oracle;

TEST(TwoOrbits, AllPrimesPass) {
  for (unsigned p : {3u, 5u, 7u}) {
    const auto v = verify_lemma_two_orbits(p);
    EXPECT_EQ(v.configurations, (2u << p) - 1) << p;
    EXPECT_EQ(v.valid_posets, v.configurations);
    EXPECT_EQ(v.counterexamples, 0u) << p;
    EXPECT_TRUE(v.passed());
  }
  EXPECT_THROW(verify_lemma_two_orbits(11), DomainError);
}

TEST(TwoOrbits, SevenWithZeroOneThreeHasOrderThreeRotation) {
  // S = {0,1,3}: i -> 2i on A and j -> 2j+1 on A' (2S + 1 = S),
  // i.e. (1 2 4)(3 6 5)(0' 1' 3')(2' 5' 4')
  const auto c = two_orbit_configuration(7, 0b1011, true);
  ASSERT_TRUE(c);
  std::vector<Point> img(14);
  for (Point i = 0; i < 7; ++i) {
    img[i] = (2 * i) % 7;
    img[7 + i] = 7 + (2 * i + 1) % 7;
  }
  const Permutation r(img);
  EXPECT_TRUE(is_automorphism(c->poset, r));
  EXPECT_EQ(perm_order(r), 3u);
  bool induced = false;
  for (std::int64_t k = 0; k < 7; ++k) induced = induced || perm_power(c->action, k) == r;
  EXPECT_FALSE(induced);
  const auto found = find_noninduced_orbit_automorphism(*c);
  ASSERT_TRUE(found);
  EXPECT_TRUE(is_automorphism(c->poset, *found));
}

TEST(Z4, AllConfigurationsPass) {
  const auto v = verify_lemma_z4();
  EXPECT_GT(v.valid_posets, 0u);
  EXPECT_EQ(v.counterexamples, 0u);
  // two-orbit pattern: 1 incomparable + 2 directions x 15 nonempty sets
  LemmaVerification stats;
  const auto configs = z4_configurations(&stats);
  std::size_t two = 0;
  for (const auto& c : configs) two += c.poset.size() == 8;
  EXPECT_EQ(two, 31u);
  EXPECT_EQ(configs.size(), stats.valid_posets);
}

TEST(Z4, DiscreteCaseHasTransposition) {
  auto configs = z4_configurations();
  const auto& c = configs.front();
  ASSERT_EQ(c.poset.comparabilities(), 0u);
  EXPECT_TRUE(is_automorphism(c.poset, Permutation::from_cycles(8, {{0, 1}})));
}

TEST(Z4, DifferenceSetZeroOneHasReflection) {
  // i < j' iff j - i in {0,1}; symmetry (1,3)(0',1')(2',3')
  std::vector<Relation> rel;
  for (Point i = 0; i < 4; ++i) {
    rel.emplace_back(i, 4 + i);
    rel.emplace_back(i, 4 + (i + 1) % 4);
  }
  const auto p = make_poset(8, rel);
  const auto s = Permutation::from_cycles(8, {{1, 3}, {4, 5}, {6, 7}});
  EXPECT_TRUE(is_automorphism(p, s));
  const auto rot = Permutation::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  for (std::int64_t k = 0; k < 4; ++k) EXPECT_NE(perm_power(rot, k), s);
}

TEST(Constraints, ExhaustiveUpToSeven) {
  const auto v = verify_lemma_constraints_exhaustive(7);
  EXPECT_EQ(v.violations, 0u);
  EXPECT_EQ(v.posets_checked, 1u + 1 + 2 + 5 + 16 + 63 + 318 + 2045);
  for (const auto& [points, orders] : v.with_cyclic_aut) {
    EXPECT_EQ(orders.count(3), 0u);
    EXPECT_EQ(orders.count(4), 0u);
  }
}
