#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "cycposet/automorphisms.hpp"
#include "cycposet/canonical.hpp"
#include "cycposet/detail/refinement.hpp"
#include "cycposet/error.hpp"
#include "cycposet/poset.hpp"

namespace cycposet::oracle {

inline constexpr std::size_t kEnumerationHardLimit = 11;

/// Default limit 10; CYCPOSET_ENUM_LIMIT overrides it (up to 11).
inline std::size_t default_enumeration_limit() {
  if (const char* s = std::getenv("CYCPOSET_ENUM_LIMIT")) {
    try {
      const auto v = std::stoul(s);
      return std::min<std::size_t>(v, kEnumerationHardLimit);
    } catch (...) {
    }
  }
  return 10;
}

struct EnumerationOptions {
  std::size_t limit = default_enumeration_limit();
  unsigned threads = 1;
};

/// A class representative together with its automorphism group (generators
/// and order; elements are not materialized).
struct EnumeratedPoset {
  Poset poset;
  GroupDescription group;
};

struct EnumerationRecord {
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::map<std::uint64_t, std::uint64_t> with_cyclic_aut;  // order m -> classes with Aut = Z_m
};

using Visitor = std::function<bool(const EnumeratedPoset&)>;

namespace detail {

// Bitmask of the points below x (requires size < 64).
inline std::uint64_t below_mask(const Poset& p, Point x) { return p.below(x)[0]; }

/// All down-closed subsets of p, as bitmasks.
inline std::vector<std::uint64_t> ideals(const Poset& p) {
  const std::size_t k = p.size();
  std::vector<Point> order(k);
  for (Point x = 0; x < k; ++x) order[x] = x;
  const auto h = heights(p);
  std::stable_sort(order.begin(), order.end(), [&](Point a, Point b) { return h[a] < h[b]; });
  std::vector<std::uint64_t> out;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t mask) {
    if (i == k) {
      out.push_back(mask);
      return;
    }
    const Point v = order[i];
    rec(i + 1, mask);
    const std::uint64_t d = k ? below_mask(p, v) : 0;
    if ((d & ~mask) == 0) rec(i + 1, mask | (std::uint64_t{1} << v));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t apply(const Permutation& g, std::uint64_t mask) {
  std::uint64_t r = 0;
  while (mask) {
    const auto b = static_cast<Point>(std::countr_zero(mask));
    r |= std::uint64_t{1} << g(b);
    mask &= mask - 1;
  }
  return r;
}

/// One ideal per orbit of the automorphism group on ideals.
inline std::vector<std::uint64_t> ideal_orbit_representatives(const Poset& p, const GroupDescription& g) {
  auto all = ideals(p);
  if (g.generators.empty()) return all;
  cycposet::detail::Orbits uf(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& gen : g.generators) {
      const auto img = apply(gen, all[i]);
      const auto j = static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), img) - all.begin());
      uf.unite(i, j);
    }
  std::vector<std::uint64_t> reps;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (uf.find(i) == i) reps.push_back(all[i]);
  return reps;
}

/// p plus a new maximal point n whose strict down-set is `ideal`.
inline Poset extend_with_maximal(const Poset& p, std::uint64_t ideal) {
  const std::size_t k = p.size();
  BitMatrix m(k + 1, k + 1);
  for (Point x = 0; x < k; ++x) {
    if (k) m.row(x)[0] = p.above(x)[0];
    if ((ideal >> x) & 1u) m.set(x, k);
  }
  return Poset::from_order(std::move(m));
}

/// Canonical-deletion test. The deletion orbit of C is taken inside the last
/// cell (in refined colour order) of maximal points: the whole cell when it
/// is one orbit, otherwise the orbit of its point with the highest canonical
/// position. C is accepted iff the new point lies in that orbit.
inline std::optional<GroupDescription> accept_child(const Poset& c) {
  const Point x = static_cast<Point>(c.size() - 1);
  cycposet::detail::Refiner refiner(c);
  const auto part = refiner.initial();
  std::size_t cell_start = c.size();
  for (std::size_t s = 0; s < part.size(); s = part.cell_end(s))
    if (c.is_maximal(part.lab[s])) cell_start = s;
  if (part.color[x] != cell_start) return std::nullopt;
  const std::size_t cell_size = part.cell_end(cell_start) - cell_start;

  auto g = automorphism_group(c, {.elements = Materialize::none});
  cycposet::detail::Orbits orbits(c.size());
  for (const auto& gen : g.generators) orbits.add(gen);
  if (orbits.orbit_size(x) == cell_size) return g;

  const auto lab = canonical_labeling(c, g.generators).labeling;
  Point chosen = x;
  for (std::size_t k = lab.size(); k-- > 0;)
    if (part.color[lab[k]] == cell_start) {
      chosen = lab[k];
      break;
    }
  if (orbits.find(chosen) != orbits.find(x)) return std::nullopt;
  return g;
}

class Generator {
 public:
  Generator(std::size_t max_n, std::size_t min_report, const Visitor& visit)
      : max_n_(max_n), min_report_(min_report), visit_(visit) {}

  // Returns false when the visitor asked to stop.
  bool expand(const EnumeratedPoset& node) {
    if (node.poset.size() >= min_report_ && !visit_(node)) return false;
    if (node.poset.size() == max_n_) return true;
    for (std::uint64_t ideal : ideal_orbit_representatives(node.poset, node.group)) {
      Poset child = extend_with_maximal(node.poset, ideal);
      auto g = accept_child(child);
      if (!g) continue;
      if (!expand(EnumeratedPoset{std::move(child), std::move(*g)})) return false;
    }
    return true;
  }

 private:
  std::size_t max_n_;
  std::size_t min_report_;
  const Visitor& visit_;
};

inline EnumeratedPoset root_node() {
  return EnumeratedPoset{Poset{}, automorphism_group(Poset{}, {.elements = Materialize::none})};
}

}  // namespace detail

/// Visits one representative of every isomorphism class of posets with
/// min_n..max_n points. Sequential mode visits in a fixed depth-first order;
/// with several threads the visitor is called under a lock in arbitrary order.
inline void enumerate_posets_between(std::size_t min_n, std::size_t max_n, const Visitor& visit,
                                     const EnumerationOptions& opt = {}) {
  if (max_n > opt.limit)
    throw LimitExceeded("enumeration of " + std::to_string(max_n) + " points exceeds the limit of " +
                        std::to_string(opt.limit));
  if (max_n >= 64) throw LimitExceeded("enumeration supports fewer than 64 points");

  if (opt.threads <= 1 || max_n < 4) {
    detail::Generator gen(max_n, min_n, visit);
    gen.expand(detail::root_node());
    return;
  }

  // Collect the frontier a few levels above max_n sequentially, then expand
  // frontier nodes on worker threads.
  const std::size_t split = max_n - 3;
  std::vector<EnumeratedPoset> frontier;
  std::mutex mu;
  std::atomic<bool> stop{false};
  const Visitor locked = [&](const EnumeratedPoset& e) {
    if (stop.load()) return false;
    std::lock_guard<std::mutex> lock(mu);
    if (!visit(e)) {
      stop = true;
      return false;
    }
    return true;
  };
  {
    const Visitor collect = [&](const EnumeratedPoset& e) {
      if (e.poset.size() == split) {
        frontier.push_back(e);
        return true;
      }
      return e.poset.size() < min_n || locked(e);
    };
    detail::Generator gen(split, 0, collect);
    gen.expand(detail::root_node());
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < frontier.size() && !stop.load(); i = next++) {
      const Visitor v = [&](const EnumeratedPoset& e) { return e.poset.size() < min_n || locked(e); };
      detail::Generator gen(max_n, 0, v);
      gen.expand(frontier[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < opt.threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

inline void enumerate_posets(std::size_t n, const Visitor& visit, const EnumerationOptions& opt = {}) {
  enumerate_posets_between(n, n, [&](const EnumeratedPoset& e) { return e.poset.size() != n || visit(e); }, opt);
}

inline std::vector<Poset> enumerate_posets(std::size_t n, const EnumerationOptions& opt = {}) {
  std::vector<Poset> out;
  enumerate_posets(n, [&](const EnumeratedPoset& e) {
    out.push_back(e.poset);
    return true;
  }, opt);
  return out;
}

inline EnumerationRecord enumeration_record(std::size_t n, const EnumerationOptions& opt = {}) {
  EnumerationRecord rec;
  rec.n = n;
  enumerate_posets(n, [&](const EnumeratedPoset& e) {
    ++rec.total;
    if (e.group.cyclic) ++rec.with_cyclic_aut[e.group.order.convert_to<std::uint64_t>()];
    return true;
  }, opt);
  return rec;
}

/// Smallest k <= limit such that some poset on k points has Aut cyclic of order m.
inline std::optional<std::size_t> min_points_with_cyclic_aut(std::uint64_t m, std::size_t limit,
                                                             const EnumerationOptions& opt = {}) {
  for (std::size_t k = 0; k <= limit; ++k) {
    bool found = false;
    enumerate_posets(k, [&](const EnumeratedPoset& e) {
      if (e.group.cyclic && e.group.order == BigInt(m)) found = true;
      return !found;
    }, opt);
    if (found) return k;
  }
  return std::nullopt;
}

// Cache file: 8-byte magic "CYCPOSC1", u32 n, u64 count, then `count`
// records of u32 length + canonical form bytes. Integers little-endian.
namespace cache {

inline constexpr char kMagic[8] = {'C', 'Y', 'C', 'P', 'O', 'S', 'C', '1'};

template <typename T>
void put(std::ostream& os, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) os.put(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff));
}

template <typename T>
T get(std::istream& is) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    const int c = is.get();
    if (c == EOF) throw DomainError("truncated cache file");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return static_cast<T>(v);
}

inline void write(const std::string& path, std::size_t n, const std::vector<CanonicalForm>& forms) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DomainError("cannot open cache file " + path);
  os.write(kMagic, sizeof kMagic);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(n));
  put<std::uint64_t>(os, forms.size());
  for (const auto& f : forms) {
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.size()));
    os.write(f.data(), static_cast<std::streamsize>(f.size()));
  }
}

struct Contents {
  std::size_t n = 0;
  std::vector<CanonicalForm> forms;
};

inline Contents read(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DomainError("cannot open cache file " + path);
  char magic[8];
  if (!is.read(magic, sizeof magic) || !std::equal(magic, magic + 8, kMagic))
    throw DomainError("not a poset cache file: " + path);
  Contents c;
  c.n = get<std::uint32_t>(is);
  const auto count = get<std::uint64_t>(is);
  c.forms.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto len = get<std::uint32_t>(is);
    CanonicalForm f(len, '\0');
    if (!is.read(f.data(), len)) throw DomainError("truncated cache file");
    c.forms.push_back(std::move(f));
  }
  return c;
}

}  // namespace cache

}  // namespace cycposet::oracle
