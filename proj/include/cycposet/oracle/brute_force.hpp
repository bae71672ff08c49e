#pragma once

#include <functional>
#include <vector>

#include "cycposet/error.hpp"
#include "cycposet/permutation.hpp"
#include "cycposet/poset.hpp"

namespace cycposet::oracle {

inline constexpr std::size_t kBruteForceLimit = 10;

/// Walks every permutation s with block[s(x)] == block[x] that preserves the
/// order, assigning images point by point and discarding a prefix as soon as
/// it breaks a relation with an earlier point. `visit` returns false to stop.
/// Returns false if stopped early.
inline bool for_each_automorphism(const Poset& p, const std::vector<int>& block,
                                  const std::function<bool(const Permutation&)>& visit) {
  const std::size_t n = p.size();
  std::vector<Point> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t x) -> bool {
    if (x == n) return visit(Permutation(image));
    for (Point y = 0; y < n; ++y) {
      if (used[y] || block[y] != block[x]) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z) {
        const Point pz = static_cast<Point>(z);
        ok = p.less(pz, static_cast<Point>(x)) == p.less(image[z], y) &&
             p.less(static_cast<Point>(x), pz) == p.less(y, image[z]);
      }
      if (!ok) continue;
      used[y] = true;
      image[x] = y;
      if (!rec(x + 1)) return false;
      used[y] = false;
    }
    return true;
  };
  return rec(0);
}

/// Every automorphism of p, sorted, by exhaustive search over permutations.
inline std::vector<Permutation> brute_force_automorphisms(const Poset& p) {
  if (p.size() > kBruteForceLimit)
    throw LimitExceeded("brute-force automorphism search is limited to " + std::to_string(kBruteForceLimit) +
                        " points");
  std::vector<Permutation> out;
  for_each_automorphism(p, std::vector<int>(p.size(), 0), [&](const Permutation& s) {
    out.push_back(s);
    return true;
  });
  return out;  // produced in lexicographic order of images
}

}  // namespace cycposet::oracle
