#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycposet/detail/refinement.hpp"
#include "cycposet/poset.hpp"

namespace cycposet {

/// Canonical byte string: two big-endian bytes of n followed by the order
/// matrix in canonical labelling, row-major, eight bits per byte, MSB first.
using CanonicalForm = std::string;

struct CanonicalLabeling {
  /// labeling[k] is the original point placed at canonical position k.
  std::vector<Point> labeling;
  CanonicalForm form;
  /// Automorphisms met while searching (not necessarily a generating set).
  std::vector<Permutation> automorphisms;
};

namespace detail {

/// Individualisation-refinement search for the lexicographically least
/// row-major order matrix over all leaves of the search tree. Children of a
/// node that lie in one orbit of the known automorphisms fixing that node's
/// individualised points are explored once.
class CanonicalSearch {
 public:
  CanonicalSearch(const Poset& p, std::vector<Permutation> known)
      : p_(p), n_(p.size()), w_(words_for(p.size())), refiner_(p), autos_(std::move(known)) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ > 0) {
      Partition root = refiner_.initial();
      std::vector<Point> prefix;
      explore(root, prefix);
      out.labeling = best_lab_;
    }
    out.form = encode(best_rows_);
    out.automorphisms = std::move(found_);
    return out;
  }

 private:
  void explore(const Partition& part, std::vector<Point>& prefix) {
    if (part.discrete()) {
      leaf(part.lab);
      return;
    }
    const auto [s, e] = *part.target_cell();
    std::vector<Point> cell(part.lab.begin() + static_cast<std::ptrdiff_t>(s),
                            part.lab.begin() + static_cast<std::ptrdiff_t>(e));
    std::sort(cell.begin(), cell.end());
    std::vector<Point> explored;
    std::size_t seen_autos = static_cast<std::size_t>(-1);
    Orbits orbits(n_);
    for (Point w : cell) {
      if (seen_autos != autos_.size()) {
        orbits = Orbits(n_);
        for (const auto& g : autos_)
          if (fixes_all(g, prefix, prefix.size())) orbits.add(g);
        seen_autos = autos_.size();
      }
      bool skip = false;
      for (Point x : explored)
        if (orbits.find(x) == orbits.find(w)) {
          skip = true;
          break;
        }
      if (skip) continue;
      explored.push_back(w);
      Partition child = part;
      refiner_.individualize(child, w);
      refiner_.refine(child);
      prefix.push_back(w);
      explore(child, prefix);
      prefix.pop_back();
    }
  }

  // Row i holds bit j at position 63 - (j % 64) so numeric word order is
  // lexicographic bit order.
  std::vector<Word> rows_for(const std::vector<Point>& lab) {
    std::vector<Point> pos(n_);
    for (std::size_t k = 0; k < n_; ++k) pos[lab[k]] = static_cast<Point>(k);
    std::vector<Word> rows(n_ * w_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for_each_bit(p_.above(lab[i]), [&](std::size_t y) {
        const std::size_t j = pos[y];
        rows[i * w_ + j / kWordBits] |= Word{1} << (kWordBits - 1 - j % kWordBits);
      });
    return rows;
  }

  void leaf(const std::vector<Point>& lab) {
    auto rows = rows_for(lab);
    if (first_lab_.empty()) {
      first_lab_ = lab;
      first_rows_ = rows;
      best_lab_ = lab;
      best_rows_ = std::move(rows);
      return;
    }
    if (rows == first_rows_) {
      record(first_lab_, lab);
      return;
    }
    if (rows == best_rows_) {
      record(best_lab_, lab);
      return;
    }
    if (rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_lab_ = lab;
    }
  }

  void record(const std::vector<Point>& from, const std::vector<Point>& to) {
    std::vector<Point> image(n_);
    for (std::size_t k = 0; k < n_; ++k) image[from[k]] = to[k];
    Permutation g(std::move(image));
    found_.push_back(g);
    autos_.push_back(std::move(g));
  }

  std::string encode(const std::vector<Word>& rows) const {
    std::string out;
    out.push_back(static_cast<char>((n_ >> 8) & 0xff));
    out.push_back(static_cast<char>(n_ & 0xff));
    const std::size_t bits = n_ * n_;
    out.resize(2 + (bits + 7) / 8, '\0');
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const bool b = (rows[i * w_ + j / kWordBits] >> (kWordBits - 1 - j % kWordBits)) & 1u;
        if (!b) continue;
        const std::size_t k = i * n_ + j;
        out[2 + k / 8] = static_cast<char>(static_cast<unsigned char>(out[2 + k / 8]) | (0x80u >> (k % 8)));
      }
    return out;
  }

  const Poset& p_;
  std::size_t n_;
  std::size_t w_;
  Refiner refiner_;
  std::vector<Permutation> autos_;
  std::vector<Permutation> found_;
  std::vector<Point> first_lab_, best_lab_;
  std::vector<Word> first_rows_, best_rows_;
};

}  // namespace detail

/// `known` may carry automorphisms of p (e.g. from automorphism_group) to
/// prune the search; the result does not depend on it.
inline CanonicalLabeling canonical_labeling(const Poset& p, std::vector<Permutation> known = {}) {
  return detail::CanonicalSearch(p, std::move(known)).run();
}

inline CanonicalForm canonical_form(const Poset& p) { return canonical_labeling(p).form; }

inline bool are_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size() || a.comparabilities() != b.comparabilities()) return false;
  return canonical_form(a) == canonical_form(b);
}

/// Rebuilds the poset a canonical form describes (in canonical labelling).
inline Poset poset_from_canonical_form(const CanonicalForm& form) {
  if (form.size() < 2) throw DomainError("canonical form too short");
  const std::size_t n = (static_cast<std::size_t>(static_cast<unsigned char>(form[0])) << 8) |
                        static_cast<unsigned char>(form[1]);
  if (form.size() != 2 + (n * n + 7) / 8) throw DomainError("canonical form has the wrong length");
  BitMatrix m(n, n);
  for (std::size_t k = 0; k < n * n; ++k)
    if (static_cast<unsigned char>(form[2 + k / 8]) & (0x80u >> (k % 8))) m.set(k / n, k % n);
  return Poset::from_order(std::move(m));
}

}  // namespace cycposet
