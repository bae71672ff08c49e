#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cycposet/cycposet.hpp"
#include "oracles.hpp"

using namespace cycposet;

namespace {

std::vector<std::vector<int>> solver_elements(const Poset& p) {
  const auto g = automorphism_group(p, {.elements = Materialize::required});
  std::vector<std::vector<int>> out;
  for (const auto& s : g.elements) out.push_back(oracle_ref::as_ints(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(AutomorphismGroup, EmptyPoset) {
  const auto g = automorphism_group(Poset{});
  EXPECT_EQ(g.order, 1);
  EXPECT_TRUE(g.cyclic);
}

TEST(AutomorphismGroup, AntichainIsSymmetric) {
  BigInt f = 1;
  for (std::size_t k = 1; k <= 30; ++k) {
    f *= k;
    EXPECT_EQ(automorphism_group(antichain(k), {.elements = Materialize::none}).order, f);
  }
  EXPECT_EQ(automorphism_group(antichain(5)).elements.size(), 120u);
}

TEST(AutomorphismGroup, Z12Poset) {
  const auto g = automorphism_group(z12_poset());
  EXPECT_EQ(g.order, 12);
  ASSERT_TRUE(g.materialized);
  EXPECT_TRUE(g.has_element_of_order.at(12));
  EXPECT_TRUE(g.cyclic);
}

TEST(AutomorphismGroup, CapExceeded) {
  EXPECT_THROW(automorphism_group(antichain(12), {.cap = 1000, .elements = Materialize::required}), CapExceeded);
  const auto g = automorphism_group(antichain(12), {.cap = 1000});
  EXPECT_FALSE(g.materialized);
  EXPECT_EQ(g.order, 479001600);
}

TEST(IsCyclicAutOfOrder, Examples) {
  EXPECT_TRUE(is_cyclic_aut_of_order(frucht_poset(3), 3));
  EXPECT_TRUE(is_cyclic_aut_of_order(chain(5), 1));
  EXPECT_FALSE(is_cyclic_aut_of_order(antichain(3), 3));
  EXPECT_FALSE(is_cyclic_aut_of_order(ordinal_sum({antichain(2), antichain(2)}), 4));
}

TEST(FindGenerator, FruchtThree) {
  const auto g = find_generator(frucht_poset(3));
  EXPECT_EQ(perm_order(g), 3u);
  EXPECT_EQ(cycle_type(g), CycleType::from_lengths({3, 3, 3}));
  const auto all = oracle_ref::all_automorphisms(oracle_ref::to_matrix(frucht_poset(3)));
  EXPECT_EQ(all.size(), 3u);
  EXPECT_NE(std::find(all.begin(), all.end(), oracle_ref::as_ints(g)), all.end());
}

TEST(FindGenerator, AntichainOfTwo) {
  EXPECT_EQ(find_generator(antichain(2)), Permutation({1, 0}));
  EXPECT_THROW(find_generator(antichain(3)), NotCyclic);
}

TEST(FindGenerator, Z12CycleType) {
  const auto g = find_generator(z12_poset());
  EXPECT_EQ(perm_order(g), 12u);
  EXPECT_EQ(cycle_type(g), CycleType::from_lengths({6, 6, 4, 4}));
}

TEST(Z12, BruteForceGroupHasTwelveElementsAndTypeSixSixFourFour) {
  const auto p = z12_poset();
  std::size_t count = 0;
  std::set<std::vector<std::size_t>> full_order_types;
  oracle::for_each_automorphism(p, std::vector<int>(20, 0), [&](const Permutation& s) {
    ++count;
    if (perm_order(s) == 12) full_order_types.insert(cycle_type(s).lengths);
    return true;
  });
  EXPECT_EQ(count, 12u);
  ASSERT_EQ(full_order_types.size(), 1u);
  EXPECT_EQ(*full_order_types.begin(), (std::vector<std::size_t>{6, 6, 4, 4}));
}

TEST(AutomorphismProperty, AgreesWithAllPermutationFilter) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const auto p = oracle_ref::random_poset(n, std::uniform_real_distribution<>(0.0, 0.6)(rng), rng);
    EXPECT_EQ(solver_elements(p), oracle_ref::all_automorphisms(oracle_ref::to_matrix(p)));
  }
}

TEST(AutomorphismProperty, ElementsAreAutomorphismsAndClosed) {
  std::mt19937_64 rng(8);
  std::vector<Poset> samples{z12_poset(), minimal_poset(6), minimal_poset(10), antichain(4),
                             ordinal_sum({antichain(3), antichain(2)})};
  for (int t = 0; t < 40; ++t) samples.push_back(oracle_ref::random_poset(4 + rng() % 10, 0.2, rng));
  for (const auto& p : samples) {
    const auto g = automorphism_group(p);
    ASSERT_TRUE(g.materialized);
    EXPECT_EQ(BigInt(g.elements.size()), g.order);
    const std::set<Permutation> set(g.elements.begin(), g.elements.end());
    EXPECT_EQ(set.size(), g.elements.size());
    for (const auto& a : g.elements) {
      EXPECT_TRUE(is_automorphism(p, a));
      EXPECT_TRUE(set.count(a.inverse()));
      for (const auto& b : g.generators) EXPECT_TRUE(set.count(a * b));
    }
    // cyclic iff an element of full order exists
    EXPECT_EQ(g.cyclic, g.has_element_of_order.at(g.order.convert_to<std::uint64_t>()));
    if (g.generator_of_full_order) {
      EXPECT_EQ(BigInt(perm_order(*g.generator_of_full_order)), g.order);
    }
  }
}

TEST(AutomorphismProperty, OrderIsInvariantUnderRelabelling) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto p = oracle_ref::random_poset(5 + rng() % 30, 0.1, rng);
    const auto q = relabel(p, oracle_ref::random_permutation(p.size(), rng));
    const auto gp = automorphism_group(p, {.elements = Materialize::none});
    const auto gq = automorphism_group(q, {.elements = Materialize::none});
    EXPECT_EQ(gp.order, gq.order);
    EXPECT_EQ(gp.cyclic, gq.cyclic);
  }
}

TEST(AutomorphismProperty, GeneratorHasFullOrderWhenReturned) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const auto g = find_generator(minimal_poset(n));
    EXPECT_EQ(perm_order(g), n);
    EXPECT_TRUE(is_automorphism(minimal_poset(n), g));
  }
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(oracle::brute_force_automorphisms(chain(4)).size(), 1u);
  EXPECT_EQ(oracle::brute_force_automorphisms(antichain(3)).size(), 6u);
  EXPECT_EQ(oracle::brute_force_automorphisms(frucht_poset(3)).size(), 3u);
  EXPECT_THROW(oracle::brute_force_automorphisms(antichain(11)), LimitExceeded);
}

TEST(BruteForce, AgreesWithAllPermutationFilter) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 200; ++t) {
    const auto p = oracle_ref::random_poset(1 + rng() % 7, 0.35, rng);
    std::vector<std::vector<int>> got;
    for (const auto& s : oracle::brute_force_automorphisms(p)) got.push_back(oracle_ref::as_ints(s));
    EXPECT_EQ(got, oracle_ref::all_automorphisms(oracle_ref::to_matrix(p)));
  }
}
