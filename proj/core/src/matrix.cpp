#include "bct/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace bct {

long long MarginPair::row_total() const {
  return std::accumulate(row_sums.begin(), row_sums.end(), 0LL);
}

long long MarginPair::col_total() const {
  return std::accumulate(col_sums.begin(), col_sums.end(), 0LL);
}

BinaryMatrix BinaryMatrix::zeros(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix shape must be at least 1x1");
  BinaryMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.bits_.assign((static_cast<size_t>(rows) * cols + 63) / 64, 0);
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& bit_rows) {
  if (bit_rows.empty() || bit_rows.front().empty())
    throw std::invalid_argument("from_rows: need at least one row and one column");
  const size_t cols = bit_rows.front().size();
  BinaryMatrix m = zeros(static_cast<int>(bit_rows.size()), static_cast<int>(cols));
  for (size_t i = 0; i < bit_rows.size(); ++i) {
    if (bit_rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (size_t j = 0; j < cols; ++j) {
      const int v = bit_rows[i][j];
      if (v != 0 && v != 1) throw std::invalid_argument("from_rows: entry is not 0 or 1");
      if (v) m.set(static_cast<int>(i), static_cast<int>(j), 1);
    }
  }
  return m;
}

BinaryMatrix BinaryMatrix::parse_text(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> current;
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      current.push_back(ch - '0');
    } else if (ch == '\n') {
      if (!current.empty()) rows.push_back(std::move(current));
      current.clear();
    } else if (ch == '\r' || ch == ' ' || ch == '\t') {
      continue;
    } else {
      throw std::invalid_argument("parse_text: unexpected character in matrix text");
    }
  }
  if (!current.empty()) rows.push_back(std::move(current));
  return from_rows(rows);
}

void BinaryMatrix::set(int i, int j, int value) {
  const int t = i * cols_ + j;
  const uint64_t mask = uint64_t{1} << (63 - (t & 63));
  if (value)
    bits_[t >> 6] |= mask;
  else
    bits_[t >> 6] &= ~mask;
}

std::vector<int> BinaryMatrix::row_sums() const {
  std::vector<int> sums(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) sums[i] += at(i, j);
  return sums;
}

std::vector<int> BinaryMatrix::col_sums() const {
  std::vector<int> sums(cols_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) sums[j] += at(i, j);
  return sums;
}

std::string BinaryMatrix::to_text() const {
  std::string out;
  out.reserve(static_cast<size_t>(rows_) * (cols_ + 1));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.push_back(at(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::string BinaryMatrix::bitstring() const {
  std::string out;
  out.reserve(static_cast<size_t>(rows_) * cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.push_back(at(i, j) ? '1' : '0');
  return out;
}

BinaryMatrix BinaryMatrix::without_column(int j) const {
  if (cols_ < 2) throw std::invalid_argument("without_column: would leave no columns");
  BinaryMatrix out = zeros(rows_, cols_ - 1);
  for (int i = 0; i < rows_; ++i) {
    int q = 0;
    for (int c = 0; c < cols_; ++c) {
      if (c == j) continue;
      if (at(i, c)) out.set(i, q, 1);
      ++q;
    }
  }
  return out;
}

IntegerMatrix partial_sum_matrix(const BinaryMatrix& m) {
  IntegerMatrix s;
  s.rows = m.rows();
  s.cols = m.cols();
  s.values.assign(static_cast<size_t>(s.rows) * s.cols, 0);
  for (int i = 0; i < s.rows; ++i) {
    int row_run = 0;
    for (int j = 0; j < s.cols; ++j) {
      row_run += m.at(i, j);
      const int above = i > 0 ? s.values[static_cast<size_t>(i - 1) * s.cols + j] : 0;
      s.values[static_cast<size_t>(i) * s.cols + j] = above + row_run;
    }
  }
  return s;
}

bool leq_bruhat(const BinaryMatrix& m1, const BinaryMatrix& m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols() || m1.margins() != m2.margins())
    throw std::invalid_argument("leq_bruhat: margin mismatch");
  const IntegerMatrix s1 = partial_sum_matrix(m1);
  const IntegerMatrix s2 = partial_sum_matrix(m2);
  for (size_t t = 0; t < s1.values.size(); ++t)
    if (s1.values[t] < s2.values[t]) return false;
  return true;
}

std::vector<CornerSelection> find_l2(const BinaryMatrix& m) {
  std::vector<CornerSelection> out;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.rows(); ++j)
      for (int k = 0; k < m.cols(); ++k) {
        if (m.at(i, k) != 0 || m.at(j, k) != 1) continue;
        for (int l = k + 1; l < m.cols(); ++l)
          if (m.at(i, l) == 1 && m.at(j, l) == 0) out.push_back({i, j, k, l});
      }
  return out;
}

namespace {

void require_l2(const BinaryMatrix& m, const CornerSelection& sel) {
  const auto [i, j, k, l] = sel;
  if (i < 0 || j >= m.rows() || k < 0 || l >= m.cols() || i >= j || k >= l)
    throw std::invalid_argument("corner selection out of range");
  if (m.at(i, k) != 0 || m.at(i, l) != 1 || m.at(j, k) != 1 || m.at(j, l) != 0)
    throw std::invalid_argument("corner submatrix is not L2");
}

}  // namespace

BinaryMatrix interchange(const BinaryMatrix& m, const CornerSelection& sel) {
  require_l2(m, sel);
  BinaryMatrix out = m;
  out.set(sel.top_row, sel.left_col, 1);
  out.set(sel.top_row, sel.right_col, 0);
  out.set(sel.bottom_row, sel.left_col, 0);
  out.set(sel.bottom_row, sel.right_col, 1);
  return out;
}

bool is_secondary_cover(const BinaryMatrix& m, const CornerSelection& sel) {
  require_l2(m, sel);
  const auto [i, j, k, l] = sel;
  for (int p = i + 1; p < j; ++p)
    if (m.at(p, k) != m.at(p, l)) return false;
  for (int q = k + 1; q < l; ++q)
    if (m.at(i, q) != m.at(j, q)) return false;
  for (int p = i + 1; p < j; ++p)
    for (int q = k + 1; q < l; ++q) {
      if (m.at(p, k) == 0 && m.at(i, q) == 0 && m.at(p, q) != 0) return false;
      if (m.at(p, k) == 1 && m.at(i, q) == 1 && m.at(p, q) != 1) return false;
    }
  return true;
}

int column_prefix_sum(const BinaryMatrix& m, int p, int q) {
  if (p < 0 || p >= m.rows() || q < 0 || q >= m.cols())
    throw std::invalid_argument("column_prefix_sum: index out of range");
  int total = 0;
  for (int i = 0; i <= p; ++i) total += m.at(i, q);
  return total;
}

}  // namespace bct
