#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cycposet/bitmatrix.hpp"
#include "cycposet/error.hpp"
#include "cycposet/permutation.hpp"

namespace cycposet {

inline constexpr std::size_t kDefaultMaxPoints = 512;

using Relation = std::pair<Point, Point>;

/// Finite strict partial order on the points 0..n-1.
///
/// Stores the transitively closed order (rows: points above x), its transpose
/// (points below x), and the cover relation in both directions. Values are
/// immutable once built; every public constructor path validates the order
/// axioms.
class Poset {
 public:
  Poset() = default;

  /// Wraps an already closed strict-order matrix. Throws CycleError if it is
  /// not irreflexive and DomainError if it is not transitive.
  static Poset from_order(BitMatrix less, std::vector<std::string> labels = {}) {
    const std::size_t n = less.rows();
    if (less.cols() != n) throw DomainError("order matrix must be square");
    for (std::size_t x = 0; x < n; ++x)
      if (less.test(x, x)) throw CycleError("order relation is not irreflexive at point " + std::to_string(x));
    for (std::size_t x = 0; x < n; ++x) {
      bool ok = true;
      for_each_bit(less.row(x), [&](std::size_t y) {
        if (ok && !is_subset(less.row(y), less.row(x))) ok = false;
      });
      if (!ok) throw DomainError("order relation is not transitive");
    }
    if (!labels.empty() && labels.size() != n) throw LengthMismatch("label count differs from point count");
    Poset p;
    p.n_ = n;
    p.above_ = std::move(less);
    p.labels_ = std::move(labels);
    p.derive();
    return p;
  }

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool less(Point x, Point y) const { return above_.test(x, y); }
  bool comparable(Point x, Point y) const { return less(x, y) || less(y, x); }
  /// True when `upper` covers `lower`.
  bool covers(Point lower, Point upper) const { return cover_above_.test(lower, upper); }

  std::span<const Word> above(Point x) const { return above_.row(x); }
  std::span<const Word> below(Point x) const { return below_.row(x); }
  std::span<const Word> covers_above(Point x) const { return cover_above_.row(x); }
  std::span<const Word> covers_below(Point x) const { return cover_below_.row(x); }
  std::size_t words_per_row() const { return above_.words_per_row(); }

  const BitMatrix& order_matrix() const { return above_; }
  std::size_t comparabilities() const { return above_.count(); }

  bool is_minimal(Point x) const { return !any_bit(below(x)); }
  bool is_maximal(Point x) const { return !any_bit(above(x)); }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Point x) const { return labels_.empty() ? std::to_string(x) : labels_[x]; }

  Poset with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != n_) throw LengthMismatch("label count differs from point count");
    Poset p = *this;
    p.labels_ = std::move(labels);
    return p;
  }

  // Labels are display-only and do not take part in equality.
  friend bool operator==(const Poset& a, const Poset& b) { return a.above_ == b.above_; }

 private:
  void derive() {
    below_ = above_.transposed();
    cover_above_ = BitMatrix(n_, n_);
    const std::size_t w = above_.words_per_row();
    std::vector<Word> reach(w);
    for (std::size_t x = 0; x < n_; ++x) {
      std::fill(reach.begin(), reach.end(), Word{0});
      for_each_bit(above_.row(x), [&](std::size_t z) {
        const auto rz = above_.row(z);
        for (std::size_t i = 0; i < w; ++i) reach[i] |= rz[i];
      });
      auto out = cover_above_.row(x);
      const auto rx = above_.row(x);
      for (std::size_t i = 0; i < w; ++i) out[i] = rx[i] & ~reach[i];
    }
    cover_below_ = cover_above_.transposed();
  }

  std::size_t n_ = 0;
  BitMatrix above_;
  BitMatrix below_;
  BitMatrix cover_above_;
  BitMatrix cover_below_;
  std::vector<std::string> labels_;
};

/// Transitive closure of `relations` on n points ((a,b) means a<b).
inline Poset make_poset(std::size_t n, const std::vector<Relation>& relations,
                        std::size_t max_points = kDefaultMaxPoints) {
  if (n > max_points)
    throw CapacityError("poset with " + std::to_string(n) + " points exceeds the limit of " +
                        std::to_string(max_points));
  BitMatrix m(n, n);
  for (const auto& [a, b] : relations) {
    if (a >= n || b >= n)
      throw IndexError("relation (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for " +
                       std::to_string(n) + " points");
    m.set(a, b);
  }
  m.close_transitively();
  for (std::size_t x = 0; x < n; ++x)
    if (m.test(x, x)) throw CycleError("relations contain a directed cycle through point " + std::to_string(x));
  return Poset::from_order(std::move(m));
}

inline Poset antichain(std::size_t k) { return make_poset(k, {}); }

inline Poset chain(std::size_t k) {
  std::vector<Relation> r;
  for (Point i = 0; i + 1 < k; ++i) r.emplace_back(i, i + 1);
  return make_poset(k, r);
}

/// Cover edges (x,y), y covering x, in lexicographic order.
inline std::vector<Relation> transitive_reduction(const Poset& p) {
  std::vector<Relation> edges;
  for (Point x = 0; x < p.size(); ++x)
    for_each_bit(p.covers_above(x), [&](std::size_t y) { edges.emplace_back(x, static_cast<Point>(y)); });
  return edges;
}

inline Poset opposite(const Poset& p) {
  return Poset::from_order(p.order_matrix().transposed(), p.labels());
}

/// Stacks the parts bottom to top: every point of an earlier part lies below
/// every point of a later one.
inline Poset ordinal_sum(const std::vector<Poset>& parts) {
  std::size_t n = 0;
  bool any_labels = false;
  for (const auto& q : parts) {
    n += q.size();
    any_labels = any_labels || !q.labels().empty();
  }
  BitMatrix m(n, n);
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (const auto& q : parts) {
    for (Point x = 0; x < q.size(); ++x) {
      for_each_bit(q.above(x), [&](std::size_t y) { m.set(offset + x, offset + y); });
      for (std::size_t y = offset + q.size(); y < n; ++y) m.set(offset + x, y);
      if (any_labels) labels.push_back(q.labels().empty() ? std::to_string(offset + x) : q.labels()[x]);
    }
    offset += q.size();
  }
  return Poset::from_order(std::move(m), std::move(labels));
}

/// Image of p under sigma: sigma(x) < sigma(y) in the result iff x < y in p.
inline Poset relabel(const Poset& p, const Permutation& sigma) {
  if (sigma.size() != p.size()) throw LengthMismatch("relabelling permutation has the wrong length");
  BitMatrix m(p.size(), p.size());
  for (Point x = 0; x < p.size(); ++x)
    for_each_bit(p.above(x), [&](std::size_t y) { m.set(sigma(x), sigma(static_cast<Point>(y))); });
  std::vector<std::string> labels;
  if (!p.labels().empty()) {
    labels.resize(p.size());
    for (Point x = 0; x < p.size(); ++x) labels[sigma(x)] = p.labels()[x];
  }
  return Poset::from_order(std::move(m), std::move(labels));
}

inline bool is_automorphism(const Poset& p, const Permutation& s) {
  if (s.size() != p.size())
    throw LengthMismatch("permutation has " + std::to_string(s.size()) + " points, poset has " +
                         std::to_string(p.size()));
  // Comparability counts are preserved by any bijection that maps relations
  // into relations, so checking one direction suffices.
  for (Point x = 0; x < p.size(); ++x) {
    bool ok = true;
    for_each_bit(p.above(x), [&](std::size_t y) {
      if (ok && !p.less(s(x), s(static_cast<Point>(y)))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

/// Height of x: number of edges in the longest chain with maximum x.
inline std::vector<std::size_t> heights(const Poset& p) {
  std::vector<std::size_t> h(p.size(), 0);
  std::vector<Point> order(p.size());
  for (Point x = 0; x < p.size(); ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Point a, Point b) {
    return popcount(p.below(a)) < popcount(p.below(b));
  });
  for (Point x : order)
    for_each_bit(p.below(x), [&](std::size_t y) { h[x] = std::max(h[x], h[y] + 1); });
  return h;
}

/// Depth of x: number of edges in the longest chain with minimum x.
inline std::vector<std::size_t> depths(const Poset& p) {
  std::vector<std::size_t> d(p.size(), 0);
  std::vector<Point> order(p.size());
  for (Point x = 0; x < p.size(); ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Point a, Point b) {
    return popcount(p.above(a)) < popcount(p.above(b));
  });
  for (Point x : order)
    for_each_bit(p.above(x), [&](std::size_t y) { d[x] = std::max(d[x], d[y] + 1); });
  return d;
}

}  // namespace cycposet
