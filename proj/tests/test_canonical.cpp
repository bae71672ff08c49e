#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "cycposet/cycposet.hpp"
#include "oracles.hpp"

using namespace cycposet;

namespace {

Poset from_matrix(const oracle_ref::Matrix& m) {
  std::vector<Relation> rel;
  for (Point x = 0; x < m.size(); ++x)
    for (Point y = 0; y < m.size(); ++y)
      if (m[x][y]) rel.emplace_back(x, y);
  return make_poset(m.size(), rel);
}

}  // namespace

TEST(CanonicalForm, RelabelledChainsAgree) {
  const auto relabelled = make_poset(3, {{2, 0}, {0, 1}});
  EXPECT_EQ(canonical_form(chain(3)), canonical_form(relabelled));
  EXPECT_NE(canonical_form(chain(3)), canonical_form(antichain(3)));
}

TEST(CanonicalForm, FiveClassesOnThreePoints) {
  std::set<CanonicalForm> forms;
  std::set<std::uint64_t> oracle_classes;
  // every labelled strict order on 3 points
  for (unsigned mask = 0; mask < 64; ++mask) {
    oracle_ref::Matrix m(3, std::vector<bool>(3, false));
    int k = 0;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        if (x != y) m[x][y] = (mask >> k++) & 1u;
    if (!oracle_ref::is_strict_order(m)) continue;
    forms.insert(canonical_form(from_matrix(m)));
    oracle_classes.insert(oracle_ref::min_code(m));
  }
  EXPECT_EQ(oracle_classes.size(), 5u);
  EXPECT_EQ(forms.size(), 5u);
}

TEST(CanonicalForm, AgreesWithBruteForceClassificationUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::map<std::uint64_t, CanonicalForm> by_oracle;
    std::map<CanonicalForm, std::uint64_t> by_form;
    for (const auto& m : oracle_ref::naturally_labelled_orders(n)) {
      const auto c = oracle_ref::min_code(m);
      const auto f = canonical_form(from_matrix(m));
      const auto [it, fresh] = by_oracle.emplace(c, f);
      if (!fresh) {
        EXPECT_EQ(it->second, f);
      }
      const auto [jt, fresh2] = by_form.emplace(f, c);
      if (!fresh2) {
        EXPECT_EQ(jt->second, c);
      }
    }
    EXPECT_EQ(by_oracle.size(), by_form.size()) << n;
  }
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  std::mt19937_64 rng(21);
  std::vector<Poset> samples{z12_poset(), minimal_poset(30), frucht_poset(7), circulant_two_level(11, {0, 1, 2, 4}),
                             antichain(20), chain(20)};
  for (int t = 0; t < 150; ++t)
    samples.push_back(oracle_ref::random_poset(rng() % 40, std::uniform_real_distribution<>(0.0, 0.3)(rng), rng));
  for (const auto& p : samples) {
    const auto f = canonical_form(p);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(canonical_form(relabel(p, oracle_ref::random_permutation(p.size(), rng))), f);
    EXPECT_EQ(poset_from_canonical_form(f).size(), p.size());
    EXPECT_TRUE(are_isomorphic(poset_from_canonical_form(f), p));
  }
}

TEST(CanonicalForm, LabelingMapsToForm) {
  const auto p = frucht_poset(5);
  const auto cl = canonical_labeling(p);
  ASSERT_EQ(cl.labeling.size(), p.size());
  std::vector<Point> inv(p.size());
  for (Point k = 0; k < p.size(); ++k) inv[cl.labeling[k]] = k;
  EXPECT_EQ(poset_from_canonical_form(cl.form), relabel(p, Permutation(inv)));
}

TEST(AreIsomorphic, Examples) {
  EXPECT_TRUE(are_isomorphic(chain(3), chain(3)));
  EXPECT_FALSE(are_isomorphic(chain(3), make_poset(3, {{0, 1}, {0, 2}})));
  const auto p = circulant_two_level(9, {0, 1, 2, 4});
  std::vector<Point> shift(18);
  for (Point i = 0; i < 9; ++i) {
    shift[i] = (i + 4) % 9;
    shift[9 + i] = 9 + (i + 4) % 9;
  }
  const auto q = relabel(p, Permutation(shift));
  EXPECT_TRUE(are_isomorphic(p, q));
  EXPECT_FALSE(are_isomorphic(p, circulant_two_level(9, {0, 1, 2})));
  EXPECT_FALSE(are_isomorphic(chain(3), chain(4)));
}

TEST(AreIsomorphic, AgreesWithFormEquality) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    const auto a = oracle_ref::random_poset(5, 0.3, rng);
    const auto b = oracle_ref::random_poset(5, 0.3, rng);
    const bool iso = are_isomorphic(a, b);
    EXPECT_EQ(iso, canonical_form(a) == canonical_form(b));
    EXPECT_EQ(iso, oracle_ref::min_code(oracle_ref::to_matrix(a)) == oracle_ref::min_code(oracle_ref::to_matrix(b)));
  }
}
