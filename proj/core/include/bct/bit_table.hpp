#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace bct {

// Dense rows-by-cols bit table. Backs reachability relations, where row a
// holds the down-set of member a. Word layout is LSB-first within a row.
class BitTable {
 public:
  BitTable() = default;
  BitTable(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        words_per_row_((cols + 63) / 64),
        data_(static_cast<size_t>(rows) * words_per_row_, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BitTable: negative shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return words_per_row_; }

  bool get(int r, int c) const {
    return (word(r, c >> 6) >> (c & 63)) & 1u;
  }
  void set(int r, int c) {
    data_[static_cast<size_t>(r) * words_per_row_ + (c >> 6)] |= uint64_t{1} << (c & 63);
  }
  void clear(int r, int c) {
    data_[static_cast<size_t>(r) * words_per_row_ + (c >> 6)] &= ~(uint64_t{1} << (c & 63));
  }

  std::span<const uint64_t> row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * words_per_row_,
            static_cast<size_t>(words_per_row_)};
  }
  std::span<uint64_t> row(int r) {
    return {data_.data() + static_cast<size_t>(r) * words_per_row_,
            static_cast<size_t>(words_per_row_)};
  }

  // row[dst] |= row[src]; reports whether any bit changed.
  bool or_rows(int dst, int src) {
    uint64_t* d = data_.data() + static_cast<size_t>(dst) * words_per_row_;
    const uint64_t* s = data_.data() + static_cast<size_t>(src) * words_per_row_;
    uint64_t changed = 0;
    for (int w = 0; w < words_per_row_; ++w) {
      const uint64_t merged = d[w] | s[w];
      changed |= merged ^ d[w];
      d[w] = merged;
    }
    return changed != 0;
  }

  // row[sub] subset of row[sup]?
  bool row_contains(int sup, int sub) const {
    auto a = row(sup);
    auto b = row(sub);
    for (int w = 0; w < words_per_row_; ++w)
      if (b[w] & ~a[w]) return false;
    return true;
  }

  int count_row(int r) const {
    int total = 0;
    for (uint64_t w : row(r)) total += __builtin_popcountll(w);
    return total;
  }

  int64_t count_all() const {
    int64_t total = 0;
    for (uint64_t w : data_) total += __builtin_popcountll(w);
    return total;
  }

  template <typename Fn>
  void for_each_in_row(int r, Fn&& fn) const {
    auto words = row(r);
    for (int w = 0; w < words_per_row_; ++w) {
      uint64_t bits = words[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        fn(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const BitTable&, const BitTable&) = default;

 private:
  uint64_t word(int r, int w) const {
    return data_[static_cast<size_t>(r) * words_per_row_ + w];
  }

  int rows_ = 0;
  int cols_ = 0;
  int words_per_row_ = 0;
  std::vector<uint64_t> data_;
};

}  // namespace bct
