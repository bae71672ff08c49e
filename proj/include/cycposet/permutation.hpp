#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "cycposet/error.hpp"

namespace cycposet {

using Point = std::uint32_t;

/// Multiset of non-trivial cycle lengths plus the number of fixed points.
/// Lengths are kept sorted in descending order so equal cycle types compare equal.
struct CycleType {
  std::vector<std::size_t> lengths;
  std::size_t fixed = 0;

  static CycleType from_lengths(std::vector<std::size_t> lengths, std::size_t fixed = 0) {
    for (std::size_t l : lengths)
      if (l < 2) throw DomainError("cycle lengths must be at least 2, got " + std::to_string(l));
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return CycleType{std::move(lengths), fixed};
  }

  std::size_t points() const {
    return std::accumulate(lengths.begin(), lengths.end(), fixed);
  }

  // lcm of the lengths; 1 for the identity.
  std::uint64_t order() const {
    std::uint64_t m = 1;
    for (std::size_t l : lengths) m = std::lcm(m, static_cast<std::uint64_t>(l));
    return m;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(lengths[i]);
    }
    return s + "}";
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (Point p : image_) {
      if (p >= image_.size() || seen[p])
        throw DomainError("permutation image is not a bijection on 0.." +
                          std::to_string(image_.size()) + "-1");
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    Permutation s;
    s.image_.resize(n);
    std::iota(s.image_.begin(), s.image_.end(), Point{0});
    return s;
  }

  // Builds from disjoint cycles, e.g. {{0,1,2},{3,4}} on n points.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> image(n);
    std::iota(image.begin(), image.end(), Point{0});
    for (const auto& c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= n) throw IndexError("cycle point out of range");
        image[c[i]] = c[(i + 1) % c.size()];
      }
    return Permutation(std::move(image));
  }

  std::size_t size() const { return image_.size(); }
  Point operator()(Point x) const { return image_[x]; }
  Point operator[](std::size_t x) const { return image_[x]; }
  const std::vector<Point>& image() const { return image_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  // (a * b)(x) = a(b(x))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw LengthMismatch("composing permutations of different sizes");
    Permutation r;
    r.image_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.image_[i] = a.image_[b.image_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.image_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) r.image_[image_[i]] = static_cast<Point>(i);
    return r;
  }

  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(size(), false);
    for (Point s = 0; s < size(); ++s) {
      if (seen[s] || image_[s] == s) continue;
      std::vector<Point> c;
      for (Point x = s; !seen[x]; x = image_[x]) {
        seen[x] = true;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Permutation& s) {
    const auto cs = s.cycles();
    if (cs.empty()) return os << "()";
    for (const auto& c : cs) {
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
      os << ')';
    }
    return os;
  }

 private:
  std::vector<Point> image_;
};

inline CycleType cycle_type(const Permutation& s) {
  CycleType ct;
  for (const auto& c : s.cycles()) ct.lengths.push_back(c.size());
  std::sort(ct.lengths.begin(), ct.lengths.end(), std::greater<>());
  ct.fixed = s.size() - std::accumulate(ct.lengths.begin(), ct.lengths.end(), std::size_t{0});
  return ct;
}

inline std::uint64_t perm_order(const Permutation& s) { return cycle_type(s).order(); }

// s^m by walking cycles; negative m gives inverse powers.
inline Permutation perm_power(const Permutation& s, std::int64_t m) {
  std::vector<Point> image(s.size());
  std::iota(image.begin(), image.end(), Point{0});
  for (const auto& c : s.cycles()) {
    const auto len = static_cast<std::int64_t>(c.size());
    const std::int64_t shift = ((m % len) + len) % len;
    for (std::int64_t i = 0; i < len; ++i)
      image[c[static_cast<std::size_t>(i)]] = c[static_cast<std::size_t>((i + shift) % len)];
  }
  return Permutation(std::move(image));
}

}  // namespace cycposet
