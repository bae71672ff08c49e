#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "cycposet/poset.hpp"

namespace cycposet::detail {

/// Ordered partition of the points. `lab` lists points cell by cell and
/// `color[v]` is the position in `lab` where v's cell starts, so cell order
/// and sizes are recoverable from the colors alone.
struct Partition {
  std::vector<Point> lab;
  std::vector<Point> color;
  std::size_t cells = 0;

  std::size_t size() const { return lab.size(); }
  bool discrete() const { return cells == lab.size(); }

  std::size_t cell_end(std::size_t start) const {
    std::size_t e = start + 1;
    while (e < lab.size() && color[lab[e]] == start) ++e;
    return e;
  }

  // First non-singleton cell as [start, end).
  std::optional<std::pair<std::size_t, std::size_t>> target_cell() const {
    for (std::size_t s = 0; s < lab.size();) {
      const std::size_t e = cell_end(s);
      if (e - s > 1) return std::make_pair(s, e);
      s = e;
    }
    return std::nullopt;
  }

  // Color sequence along lab; equal shapes mean equal cell boundaries.
  bool same_shape(const Partition& o) const {
    if (cells != o.cells) return false;
    for (std::size_t i = 0; i < lab.size(); ++i)
      if (color[lab[i]] != o.color[o.lab[i]]) return false;
    return true;
  }
};

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 29;
  return h;
}

/// Label-equivariant colour refinement for posets.
///
/// Initial colours: (height, depth, #below, #above). Each round recolours a
/// point by its old colour and, for every cell in order, the number of points
/// of that cell above it, below it, covering it and covered by it. Rounds
/// repeat until no cell splits. New sub-cells are ordered by a hash of that
/// signature; collisions can only merge, never break equivariance.
class Refiner {
 public:
  explicit Refiner(const Poset& p) : p_(p), n_(p.size()), w_(p.words_per_row()) {}

  Partition initial() {
    const auto h = heights(p_);
    const auto d = depths(p_);
    using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
    std::vector<Key> key(n_);
    for (Point x = 0; x < n_; ++x) key[x] = {h[x], d[x], popcount(p_.below(x)), popcount(p_.above(x))};
    Partition part;
    part.lab.resize(n_);
    part.color.resize(n_);
    for (Point x = 0; x < n_; ++x) part.lab[x] = x;
    std::sort(part.lab.begin(), part.lab.end(), [&](Point a, Point b) {
      return std::tie(key[a], a) < std::tie(key[b], b);
    });
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == 0 || key[part.lab[i]] != key[part.lab[i - 1]]) {
        part.color[part.lab[i]] = static_cast<Point>(i);
        ++part.cells;
      } else {
        part.color[part.lab[i]] = part.color[part.lab[i - 1]];
      }
    }
    refine(part);
    return part;
  }

  void individualize(Partition& part, Point v) const {
    const std::size_t s = part.color[v];
    const std::size_t e = part.cell_end(s);
    if (e - s <= 1) return;
    auto it = std::find(part.lab.begin() + static_cast<std::ptrdiff_t>(s),
                        part.lab.begin() + static_cast<std::ptrdiff_t>(e), v);
    std::rotate(part.lab.begin() + static_cast<std::ptrdiff_t>(s), it, it + 1);
    std::sort(part.lab.begin() + static_cast<std::ptrdiff_t>(s) + 1,
              part.lab.begin() + static_cast<std::ptrdiff_t>(e));
    for (std::size_t i = s + 1; i < e; ++i) part.color[part.lab[i]] = static_cast<Point>(s + 1);
    ++part.cells;
  }

  void refine(Partition& part) {
    if (n_ == 0) return;
    hash_.resize(n_);
    while (!part.discrete()) {
      starts_.clear();
      for (std::size_t s = 0; s < n_; s = part.cell_end(s)) starts_.push_back(s);
      masks_.assign(starts_.size() * w_, 0);
      for (std::size_t c = 0; c < starts_.size(); ++c) {
        const std::size_t e = c + 1 < starts_.size() ? starts_[c + 1] : n_;
        std::span<Word> m(masks_.data() + c * w_, w_);
        for (std::size_t i = starts_[c]; i < e; ++i) set_bit(m, part.lab[i]);
      }
      const std::size_t before = part.cells;
      for (std::size_t c = 0; c < starts_.size(); ++c) {
        const std::size_t s = starts_[c];
        const std::size_t e = c + 1 < starts_.size() ? starts_[c + 1] : n_;
        if (e - s <= 1) continue;
        for (std::size_t i = s; i < e; ++i) hash_[part.lab[i]] = signature(part.lab[i]);
        auto first = part.lab.begin() + static_cast<std::ptrdiff_t>(s);
        auto last = part.lab.begin() + static_cast<std::ptrdiff_t>(e);
        std::sort(first, last, [&](Point a, Point b) {
          return std::tie(hash_[a], a) < std::tie(hash_[b], b);
        });
        for (std::size_t i = s + 1; i < e; ++i) {
          if (hash_[part.lab[i]] != hash_[part.lab[i - 1]]) {
            part.color[part.lab[i]] = static_cast<Point>(i);
            ++part.cells;
          } else {
            part.color[part.lab[i]] = part.color[part.lab[i - 1]];
          }
        }
      }
      if (part.cells == before) break;
    }
  }

 private:
  std::uint64_t signature(Point v) const {
    std::uint64_t h = 0x51ed270b27f1a3c5ULL;
    const auto up = p_.above(v), down = p_.below(v);
    const auto cup = p_.covers_above(v), cdown = p_.covers_below(v);
    for (std::size_t c = 0; c < starts_.size(); ++c) {
      std::span<const Word> m(masks_.data() + c * w_, w_);
      const std::uint64_t a = popcount_and(up, m), b = popcount_and(down, m);
      const std::uint64_t ca = popcount_and(cup, m), cb = popcount_and(cdown, m);
      if (a | b | ca | cb) h = mix(h, (c << 40) ^ (a << 30) ^ (b << 20) ^ (ca << 10) ^ cb);
    }
    return h;
  }

  const Poset& p_;
  std::size_t n_;
  std::size_t w_;
  std::vector<std::size_t> starts_;
  std::vector<Word> masks_;
  std::vector<std::uint64_t> hash_;
};

/// Union-find over points, used for orbit bookkeeping.
class Orbits {
 public:
  explicit Orbits(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // smallest point stays the root
    parent_[b] = a;
    size_[a] += size_[b];
  }
  void add(const Permutation& g) {
    for (std::size_t x = 0; x < parent_.size(); ++x) unite(x, g(static_cast<Point>(x)));
  }
  std::size_t orbit_size(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

inline bool fixes_all(const Permutation& g, const std::vector<Point>& pts, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (g(pts[i]) != pts[i]) return false;
  return true;
}

}  // namespace cycposet::detail
