#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cycposet/automorphisms.hpp"
#include "cycposet/error.hpp"
#include "cycposet/oracle/brute_force.hpp"
#include "cycposet/oracle/enumeration.hpp"
#include "cycposet/poset.hpp"
#include "cycposet/weights.hpp"

namespace cycposet::oracle {

/// A group action by Z_m given as the permutation induced by its generator,
/// together with the orbit of every point.
struct InvariantConfiguration {
  std::string description;
  Poset poset;
  Permutation action;
  std::vector<int> orbit;  // orbit id per point
};

struct LemmaVerification {
  std::string lemma;
  std::size_t configurations = 0;   // raw configurations generated
  std::size_t valid_posets = 0;     // of which were strict partial orders
  std::size_t counterexamples = 0;
  std::vector<std::string> failures;
  bool passed() const { return counterexamples == 0; }
};

/// An automorphism that keeps every orbit of the action invariant and is not
/// one of the powers of the action's generator.
inline std::optional<Permutation> find_noninduced_orbit_automorphism(const InvariantConfiguration& c) {
  const std::uint64_t m = perm_order(c.action);
  std::vector<Permutation> induced;
  for (std::uint64_t k = 0; k < std::max<std::uint64_t>(m, 1); ++k)
    induced.push_back(perm_power(c.action, static_cast<std::int64_t>(k)));
  std::optional<Permutation> found;
  for_each_automorphism(c.poset, c.orbit, [&](const Permutation& s) {
    if (std::find(induced.begin(), induced.end(), s) != induced.end()) return true;
    found = s;
    return false;
  });
  return found;
}

namespace detail {

inline std::string set_string(unsigned mask, unsigned m) {
  std::string s = "{";
  bool first = true;
  for (unsigned d = 0; d < m; ++d)
    if ((mask >> d) & 1u) {
      s += (first ? "" : ",") + std::to_string(d);
      first = false;
    }
  return s + "}";
}

inline void check(LemmaVerification& v, const std::optional<InvariantConfiguration>& c) {
  ++v.configurations;
  if (!c) return;
  ++v.valid_posets;
  if (!find_noninduced_orbit_automorphism(*c)) {
    ++v.counterexamples;
    v.failures.push_back(c->description);
  }
}

// Orbits of sizes `sizes`, point blocks laid out consecutively. For each
// ordered orbit pair (a,b) with a<b in list order, `dir` is 0 (none), 1
// (a below b) or 2 (b below a) and `diff` the difference set: x_i < y_j iff
// (j - i) mod min(|a|,|b|) is in diff. Returns nullopt if the closure is not
// a strict order.
struct OrbitLink {
  int a = 0;
  int b = 0;
  int dir = 0;
  unsigned diff = 0;
};

inline std::optional<InvariantConfiguration> build(const std::vector<unsigned>& sizes,
                                                   const std::vector<OrbitLink>& links, std::string description) {
  std::vector<unsigned> offset(sizes.size(), 0);
  for (std::size_t i = 1; i < sizes.size(); ++i) offset[i] = offset[i - 1] + sizes[i - 1];
  const unsigned n = std::accumulate(sizes.begin(), sizes.end(), 0u);
  std::vector<Relation> rel;
  for (const auto& l : links) {
    if (l.dir == 0) continue;
    const unsigned mod = std::min(sizes[static_cast<std::size_t>(l.a)], sizes[static_cast<std::size_t>(l.b)]);
    for (unsigned i = 0; i < sizes[static_cast<std::size_t>(l.a)]; ++i)
      for (unsigned j = 0; j < sizes[static_cast<std::size_t>(l.b)]; ++j) {
        const unsigned d = ((j + mod * 8) - i) % mod;
        if (!((l.diff >> d) & 1u)) continue;
        const Point x = offset[static_cast<std::size_t>(l.a)] + i;
        const Point y = offset[static_cast<std::size_t>(l.b)] + j;
        if (l.dir == 1)
          rel.emplace_back(x, y);
        else
          rel.emplace_back(y, x);
      }
  }
  InvariantConfiguration c;
  try {
    c.poset = make_poset(n, rel);
  } catch (const CycleError&) {
    return std::nullopt;
  }
  std::vector<std::vector<Point>> cycles;
  for (std::size_t o = 0; o < sizes.size(); ++o) {
    std::vector<Point> cyc;
    for (unsigned i = 0; i < sizes[o]; ++i) {
      cyc.push_back(offset[o] + i);
      c.orbit.push_back(static_cast<int>(o));
    }
    cycles.push_back(std::move(cyc));
  }
  c.action = Permutation::from_cycles(n, cycles);
  // The action must be an automorphism; construction guarantees it.
  if (!is_automorphism(c.poset, c.action)) throw Error("internal: action is not an automorphism");
  c.description = std::move(description);
  return c;
}

}  // namespace detail

/// Z_p with two regular orbits A (0..p-1) and A' (p..2p-1), i < j' iff
/// j - i is in S. Every S (S empty is the incomparable case) in the A<A'
/// direction, and every nonempty S in the opposite direction.
inline std::optional<InvariantConfiguration> two_orbit_configuration(unsigned p, unsigned s_mask, bool a_below) {
  return detail::build({p, p}, {{0, 1, s_mask ? (a_below ? 1 : 2) : 0, s_mask}},
                       "p=" + std::to_string(p) + " S=" + detail::set_string(s_mask, p) +
                           (a_below ? " A<A'" : " A'<A"));
}

inline LemmaVerification verify_lemma_two_orbits(unsigned p) {
  if (p != 3 && p != 5 && p != 7) throw DomainError("two-orbit lemma applies to p = 3, 5, 7");
  LemmaVerification v;
  v.lemma = "two_orbits_p" + std::to_string(p);
  for (unsigned s = 0; s < (1u << p); ++s) detail::check(v, two_orbit_configuration(p, s, true));
  for (unsigned s = 1; s < (1u << p); ++s) detail::check(v, two_orbit_configuration(p, s, false));
  return v;
}

/// Z_4 configurations: two orbits of size 4, or two of size 4 plus one of
/// size 2. Points: A = 0..3, A' = 4..7, C = 8..9.
inline std::vector<InvariantConfiguration> z4_configurations(LemmaVerification* stats = nullptr) {
  std::vector<InvariantConfiguration> out;
  auto take = [&](std::optional<InvariantConfiguration> c) {
    if (stats) ++stats->configurations;
    if (!c) return;
    if (stats) ++stats->valid_posets;
    out.push_back(std::move(*c));
  };
  for (int dir = 0; dir < 3; ++dir)
    for (unsigned s = 0; s < 16; ++s) {
      if ((dir == 0) != (s == 0)) continue;
      take(detail::build({4, 4}, {{0, 1, dir, s}},
                         "two orbits: A-A' dir=" + std::to_string(dir) + " S=" + detail::set_string(s, 4)));
    }
  for (int d01 = 0; d01 < 3; ++d01)
    for (unsigned s01 = 0; s01 < 16; ++s01) {
      if ((d01 == 0) != (s01 == 0)) continue;
      for (int d02 = 0; d02 < 3; ++d02)
        for (unsigned s02 = 0; s02 < 4; ++s02) {
          if ((d02 == 0) != (s02 == 0)) continue;
          for (int d12 = 0; d12 < 3; ++d12)
            for (unsigned s12 = 0; s12 < 4; ++s12) {
              if ((d12 == 0) != (s12 == 0)) continue;
              take(detail::build({4, 4, 2}, {{0, 1, d01, s01}, {0, 2, d02, s02}, {1, 2, d12, s12}},
                                 "three orbits: A-A' dir=" + std::to_string(d01) + " S=" +
                                     detail::set_string(s01, 4) + ", A-C dir=" + std::to_string(d02) +
                                     " S=" + detail::set_string(s02, 2) + ", A'-C dir=" + std::to_string(d12) +
                                     " S=" + detail::set_string(s12, 2)));
            }
        }
    }
  return out;
}

inline LemmaVerification verify_lemma_z4() {
  LemmaVerification v;
  v.lemma = "z4_orbits";
  const auto configs = z4_configurations(&v);
  for (const auto& c : configs)
    if (!find_noninduced_orbit_automorphism(c)) {
      ++v.counterexamples;
      v.failures.push_back(c.description);
    }
  return v;
}

struct ConstraintVerification {
  std::size_t limit = 0;
  std::uint64_t posets_checked = 0;
  std::uint64_t cyclic_posets = 0;  // with Aut cyclic of order >= 2
  std::map<std::size_t, std::map<std::uint64_t, std::uint64_t>> with_cyclic_aut;  // points -> order -> count
  std::uint64_t violations = 0;
  std::vector<std::string> failures;
  bool passed() const { return violations == 0; }
};

/// For every poset on at most `limit` points whose automorphism group is
/// cyclic of order n >= 2, every generator's cycle type must pass both
/// lemma_constraints and audit_generator.
inline ConstraintVerification verify_lemma_constraints_exhaustive(std::size_t limit,
                                                                  const EnumerationOptions& opt = {}) {
  ConstraintVerification v;
  v.limit = limit;
  enumerate_posets_between(0, limit, [&](const EnumeratedPoset& e) {
    ++v.posets_checked;
    if (!e.group.cyclic || e.group.order < 2) return true;
    const auto n = e.group.order.convert_to<std::uint64_t>();
    ++v.cyclic_posets;
    ++v.with_cyclic_aut[e.poset.size()][n];
    const auto& g = *e.group.generator_of_full_order;
    for (std::uint64_t k = 1; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      const auto ct = cycle_type(perm_power(g, static_cast<std::int64_t>(k)));
      const bool ok = lemma_constraints(ct, n).passed && audit_generator(ct, n).passed;
      if (!ok) {
        ++v.violations;
        v.failures.push_back("points=" + std::to_string(e.poset.size()) + " n=" + std::to_string(n) +
                             " cycle type " + ct.to_string());
      }
    }
    return true;
  }, opt);
  return v;
}

}  // namespace cycposet::oracle
