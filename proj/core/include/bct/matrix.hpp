#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bct {

// Row and column sum vectors of a binary contingency table. Entries may be
// zero; charge vectors of exotic brane diagrams may even be negative, in
// which case no table exists.
struct MarginPair {
  std::vector<int> row_sums;
  std::vector<int> col_sums;

  int total_rows() const { return static_cast<int>(row_sums.size()); }
  int total_cols() const { return static_cast<int>(col_sums.size()); }
  long long row_total() const;
  long long col_total() const;

  friend bool operator==(const MarginPair&, const MarginPair&) = default;
};

// A 0/1 matrix stored as a packed row-major bit array (MSB-first inside each
// word, so word-wise comparison equals bitstring comparison). All indices in
// the C++ API are 0-based; the text and JSON wire formats are documented in
// the README.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;

  static BinaryMatrix zeros(int rows, int cols);
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& bit_rows);
  // Text wire format: one line per row, characters '0'/'1', no separators.
  static BinaryMatrix parse_text(std::string_view text);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  int at(int i, int j) const {
    const int t = i * cols_ + j;
    return static_cast<int>((bits_[t >> 6] >> (63 - (t & 63))) & 1u);
  }
  void set(int i, int j, int value);

  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;
  MarginPair margins() const { return {row_sums(), col_sums()}; }
  bool has_margins(const MarginPair& m) const { return margins() == m; }

  std::string to_text() const;
  std::string bitstring() const;  // row-major, no separators

  BinaryMatrix without_column(int j) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
  friend auto operator<=>(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint64_t> bits_;
};

// Corner partial sums sigma(i,j) = number of 1s in the top-left (i+1)x(j+1)
// submatrix. Values stored flat.
struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> values;

  int at(int i, int j) const { return values[static_cast<size_t>(i) * cols + j]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

// Two rows and two columns (not necessarily adjacent), top_row < bottom_row
// and left_col < right_col.
struct CornerSelection {
  int top_row = 0;
  int bottom_row = 0;
  int left_col = 0;
  int right_col = 0;

  friend bool operator==(const CornerSelection&, const CornerSelection&) = default;
  friend auto operator<=>(const CornerSelection&, const CornerSelection&) = default;
};

IntegerMatrix partial_sum_matrix(const BinaryMatrix& m);

// m1 <= m2 in the dominance (combinatorial Bruhat) order: the partial-sum
// matrix of m1 dominates that of m2 entrywise. Throws on margin mismatch.
bool leq_bruhat(const BinaryMatrix& m1, const BinaryMatrix& m2);

// All corners whose 2x2 submatrix is L2 = [[0,1],[1,0]], in ascending
// (top_row, bottom_row, left_col, right_col) order.
std::vector<CornerSelection> find_l2(const BinaryMatrix& m);

// Replaces an L2 corner by I2 = [[1,0],[0,1]]; margins are preserved and the
// result is strictly lower in both combinatorial orders. Throws if the corner
// submatrix is not L2.
BinaryMatrix interchange(const BinaryMatrix& m, const CornerSelection& sel);

// Cover criterion for the secondary order: with L2 at sel, the interchange
// result is covered by m if and only if
//   (1) m[p][k] == m[p][l] for all p strictly between the rows,
//   (2) m[i][q] == m[j][q] for all q strictly between the columns,
//   (3) m[p][k]==0 and m[i][q]==0 imply m[p][q]==0,
//   (4) m[p][k]==1 and m[i][q]==1 imply m[p][q]==1.
bool is_secondary_cover(const BinaryMatrix& m, const CornerSelection& sel);

// Number of 1s in column q among rows 0..p inclusive.
int column_prefix_sum(const BinaryMatrix& m, int p, int q);

}  // namespace bct
