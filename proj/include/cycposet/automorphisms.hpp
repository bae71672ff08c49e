#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "cycposet/detail/refinement.hpp"
#include "cycposet/error.hpp"
#include "cycposet/permutation.hpp"
#include "cycposet/poset.hpp"

namespace cycposet {

using BigInt = boost::multiprecision::cpp_int;

enum class Materialize {
  none,        // generators and order only
  up_to_cap,   // list elements when the order is at most the cap
  required,    // list elements or throw CapExceeded
};

struct AutomorphismOptions {
  std::size_t cap = 1'000'000;
  Materialize elements = Materialize::up_to_cap;
};

struct GroupDescription {
  BigInt order = 1;
  /// Strong generating set relative to `base`.
  std::vector<Permutation> generators;
  std::vector<Point> base;
  /// |orbit of base[i] under the pointwise stabiliser of base[0..i)|.
  std::vector<std::size_t> basic_orbit_sizes;
  bool materialized = false;
  /// Sorted; filled only when materialized.
  std::vector<Permutation> elements;
  /// Divisors d of the order -> some element has order d. Filled only when materialized.
  std::map<std::uint64_t, bool> has_element_of_order;
  bool abelian = true;
  bool cyclic = true;
  /// An element of order `order` when the group is cyclic.
  std::optional<Permutation> generator_of_full_order;

  std::optional<std::uint64_t> order_u64() const {
    if (order > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return order.convert_to<std::uint64_t>();
  }
};

namespace detail {

/// Stabiliser-chain automorphism search with individualisation-refinement.
///
/// The first path individualises the lowest-indexed point of the first
/// non-singleton cell at every level. Levels are then processed deepest first:
/// for each point c of the level's target cell that is not yet in the orbit
/// of the base point under the generators found so far, a backtracking search
/// looks for an automorphism fixing the earlier base points and sending the
/// base point to c. The product of the resulting orbit lengths is |Aut|.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Poset& p) : p_(p), refiner_(p) {}

  GroupDescription run() {
    GroupDescription g;
    const std::size_t n = p_.size();
    if (n == 0) return g;
    path_.push_back(refiner_.initial());
    while (auto cell = path_.back().target_cell()) {
      Partition next = path_.back();
      const Point v = *std::min_element(next.lab.begin() + static_cast<std::ptrdiff_t>(cell->first),
                                        next.lab.begin() + static_cast<std::ptrdiff_t>(cell->second));
      base_.push_back(v);
      refiner_.individualize(next, v);
      refiner_.refine(next);
      path_.push_back(std::move(next));
    }
    const std::size_t depth = base_.size();
    std::vector<std::size_t> orbit_sizes(depth, 1);
    std::vector<std::size_t> gen_level;
    Orbits orbits(n);
    for (std::size_t lvl = depth; lvl-- > 0;) {
      const auto [s, e] = *path_[lvl].target_cell();
      std::vector<Point> cell(path_[lvl].lab.begin() + static_cast<std::ptrdiff_t>(s),
                              path_[lvl].lab.begin() + static_cast<std::ptrdiff_t>(e));
      std::sort(cell.begin(), cell.end());
      for (Point c : cell) {
        if (orbits.find(c) == orbits.find(base_[lvl])) continue;
        Partition part = path_[lvl];
        refiner_.individualize(part, c);
        refiner_.refine(part);
        if (auto gamma = descend(lvl + 1, part)) {
          orbits.add(*gamma);
          g.generators.push_back(std::move(*gamma));
          gen_level.push_back(lvl);
        }
      }
      orbit_sizes[lvl] = orbits.orbit_size(base_[lvl]);
    }
    g.base = base_;
    g.basic_orbit_sizes = orbit_sizes;
    for (std::size_t sz : orbit_sizes) g.order *= sz;
    gen_level_ = std::move(gen_level);
    return g;
  }

  // Coset representatives for each base level: map orbit point -> element.
  std::vector<std::map<Point, Permutation>> transversals(const GroupDescription& g) const {
    std::vector<std::map<Point, Permutation>> out(base_.size());
    for (std::size_t lvl = 0; lvl < base_.size(); ++lvl) {
      auto& t = out[lvl];
      t.emplace(base_[lvl], Permutation::identity(p_.size()));
      std::vector<Point> queue{base_[lvl]};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const Point x = queue[qi];
        for (std::size_t k = 0; k < g.generators.size(); ++k) {
          if (gen_level_[k] < lvl) continue;
          const Point y = g.generators[k](x);
          if (t.count(y)) continue;
          t.emplace(y, g.generators[k] * t.at(x));
          queue.push_back(y);
        }
      }
    }
    return out;
  }

 private:
  std::optional<Permutation> descend(std::size_t level, const Partition& part) {
    if (!part.same_shape(path_[level])) return std::nullopt;
    if (part.discrete()) {
      const auto& leaf = path_.back().lab;
      std::vector<Point> image(p_.size());
      for (std::size_t k = 0; k < leaf.size(); ++k) image[leaf[k]] = part.lab[k];
      Permutation gamma(std::move(image));
      if (is_automorphism(p_, gamma)) return gamma;
      return std::nullopt;
    }
    const auto [s, e] = *part.target_cell();
    std::vector<Point> cell(part.lab.begin() + static_cast<std::ptrdiff_t>(s),
                            part.lab.begin() + static_cast<std::ptrdiff_t>(e));
    std::sort(cell.begin(), cell.end());
    for (Point w : cell) {
      Partition child = part;
      refiner_.individualize(child, w);
      refiner_.refine(child);
      if (auto r = descend(level + 1, child)) return r;
    }
    return std::nullopt;
  }

  const Poset& p_;
  Refiner refiner_;
  std::vector<Partition> path_;
  std::vector<Point> base_;
  std::vector<std::size_t> gen_level_;
};

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Fills the abelian/cyclic fields from the generators alone. For an abelian
// group the exponent is the lcm of the generator orders, and the group is
// cyclic exactly when that exponent equals the order.
inline void classify_cyclic(const Poset& p, GroupDescription& g) {
  g.abelian = true;
  for (std::size_t i = 0; i < g.generators.size() && g.abelian; ++i)
    for (std::size_t j = i + 1; j < g.generators.size(); ++j)
      if (g.generators[i] * g.generators[j] != g.generators[j] * g.generators[i]) {
        g.abelian = false;
        break;
      }
  g.cyclic = false;
  g.generator_of_full_order.reset();
  if (!g.abelian) return;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> orders;
  for (const auto& s : g.generators) {
    orders.push_back(perm_order(s));
    exponent = std::lcm(exponent, orders.back());
  }
  if (BigInt(exponent) != g.order) return;
  g.cyclic = true;
  // Combine, prime by prime, the generator with the largest p-part.
  Permutation result = Permutation::identity(p.size());
  std::uint64_t rest = exponent;
  for (std::uint64_t q = 2; rest > 1; ++q) {
    if (rest % q) continue;
    unsigned e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    for (std::size_t k = 0; k < orders.size(); ++k) {
      unsigned ek = 0;
      for (std::uint64_t o = orders[k]; o % q == 0; o /= q) ++ek;
      if (ek == e) {
        const std::uint64_t pe = ipow(q, e);
        result = result * perm_power(g.generators[k], static_cast<std::int64_t>(orders[k] / pe));
        break;
      }
    }
  }
  g.generator_of_full_order = std::move(result);
}

}  // namespace detail

inline GroupDescription automorphism_group(const Poset& p, const AutomorphismOptions& opt = {}) {
  detail::AutomorphismSearch search(p);
  GroupDescription g = search.run();
  detail::classify_cyclic(p, g);
  const bool fits = g.order <= BigInt(opt.cap);
  if (opt.elements == Materialize::required && !fits)
    throw CapExceeded("automorphism group of order " + g.order.str() + " exceeds the materialization cap of " +
                      std::to_string(opt.cap));
  if (opt.elements == Materialize::none || !fits) return g;

  const auto trans = search.transversals(g);
  std::vector<Permutation> elems{Permutation::identity(p.size())};
  // g = u_0 u_1 ... u_{k-1}; build from the deepest level outward.
  for (std::size_t lvl = trans.size(); lvl-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(elems.size() * trans[lvl].size());
    for (const auto& [pt, u] : trans[lvl])
      for (const auto& h : elems) next.push_back(u * h);
    elems = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  g.elements = std::move(elems);
  g.materialized = true;
  const std::uint64_t ord = g.order.convert_to<std::uint64_t>();
  std::map<std::uint64_t, bool> has;
  for (std::uint64_t d = 1; d <= ord; ++d)
    if (ord % d == 0) has[d] = false;
  for (const auto& s : g.elements) has[perm_order(s)] = true;
  g.has_element_of_order = std::move(has);
  return g;
}

inline bool is_cyclic_aut_of_order(const Poset& p, std::uint64_t m) {
  const auto g = automorphism_group(p, {.elements = Materialize::none});
  return g.order == BigInt(m) && g.cyclic;
}

/// An automorphism whose order equals |Aut(p)|; throws NotCyclic otherwise.
inline Permutation find_generator(const Poset& p) {
  const auto g = automorphism_group(p, {.elements = Materialize::none});
  if (!g.cyclic || !g.generator_of_full_order)
    throw NotCyclic("automorphism group of order " + g.order.str() + " is not cyclic");
  return *g.generator_of_full_order;
}

}  // namespace cycposet
