#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cycposet {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

inline bool test_bit(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set_bit(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline std::size_t popcount(std::span<const Word> row) {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

inline bool any_bit(std::span<const Word> row) {
  return std::any_of(row.begin(), row.end(), [](Word w) { return w != 0; });
}

template <typename F>
void for_each_bit(std::span<const Word> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word bits = row[w];
    while (bits) {
      const auto b = static_cast<std::size_t>(std::countr_zero(bits));
      f(w * kWordBits + b);
      bits &= bits - 1;
    }
  }
}

// Dense square-or-rectangular bit matrix, one word-aligned bitset per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool test(std::size_t r, std::size_t c) const { return test_bit(row(r), c); }
  void set(std::size_t r, std::size_t c) { set_bit(row(r), c); }
  void reset(std::size_t r, std::size_t c) {
    data_[r * wpr_ + c / kWordBits] &= ~(Word{1} << (c % kWordBits));
  }

  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * wpr_, wpr_}; }
  std::span<Word> row(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for_each_bit(row(r), [&](std::size_t c) { t.set(c, r); });
    return t;
  }

  // Bit-parallel Warshall closure (square matrices only).
  void close_transitively() {
    for (std::size_t k = 0; k < rows_; ++k) {
      const auto rk = row(k);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!test(i, k)) continue;
        auto ri = row(i);
        for (std::size_t w = 0; w < wpr_; ++w) ri[w] |= rk[w];
      }
    }
  }

  std::size_t count() const { return popcount(std::span<const Word>(data_)); }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> data_;
};

}  // namespace cycposet
