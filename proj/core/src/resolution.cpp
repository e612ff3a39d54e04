#include "bct/resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "bct/enumerate.hpp"
#include "bct/orders.hpp"

namespace bct {

ZMatrix ZMatrix::difference(const BinaryMatrix& m, const BinaryMatrix& m_prime) {
  if (m.cols() != 2 || m_prime.cols() != 2 || m.rows() != m_prime.rows())
    throw std::invalid_argument("ZMatrix: need two-column matrices of equal height");
  ZMatrix z;
  z.rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    z.rows.push_back({m_prime.at(i, 0) - m.at(i, 0), m_prime.at(i, 1) - m.at(i, 1)});
  return z;
}

bool ZMatrix::rows_admissible() const {
  for (const auto& row : rows) {
    const bool ok = (row[0] == 0 && row[1] == 0) || (row[0] == 1 && row[1] == -1) ||
                    (row[0] == -1 && row[1] == 1);
    if (!ok) return false;
  }
  return true;
}

bool ZMatrix::prefixes_dominated() const {
  int balance = 0;  // #(1,-1) minus #(-1,1) so far
  for (const auto& row : rows) {
    balance += row[0];
    if (balance < 0) return false;
  }
  return true;
}

bool ZMatrix::balanced() const {
  int balance = 0;
  for (const auto& row : rows) balance += row[0];
  return balance == 0;
}

std::vector<int> resolve_charges(const std::vector<int>& col_sums, const ChargeResolution& res) {
  if (res.column < 0 || res.column >= static_cast<int>(col_sums.size()))
    throw std::invalid_argument("resolve_charges: column out of range");
  if (col_sums[res.column] < 2)
    throw std::invalid_argument("resolve_charges: column sum must be at least 2");
  if (res.left_part <= 0 || res.right_part <= 0 ||
      res.left_part + res.right_part != col_sums[res.column])
    throw std::invalid_argument("resolve_charges: split parts must be positive and sum to the entry");
  std::vector<int> out;
  out.reserve(col_sums.size() + 1);
  out.insert(out.end(), col_sums.begin(), col_sums.begin() + res.column);
  out.push_back(res.left_part);
  out.push_back(res.right_part);
  out.insert(out.end(), col_sums.begin() + res.column + 1, col_sums.end());
  return out;
}

BinaryMatrix merge_columns(const ResolvedMatrix& resolved) {
  const BinaryMatrix& mt = resolved.matrix;
  const int k = resolved.origin_column;
  if (k < 0 || k + 1 >= mt.cols())
    throw std::invalid_argument("merge_columns: origin column out of range");
  BinaryMatrix out = BinaryMatrix::zeros(mt.rows(), mt.cols() - 1);
  for (int i = 0; i < mt.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) {
      int v;
      if (j < k)
        v = mt.at(i, j);
      else if (j == k)
        v = mt.at(i, k) + mt.at(i, k + 1);
      else
        v = mt.at(i, j + 1);
      if (v > 1)
        throw std::invalid_argument("merge_columns: a row carries 1s in both split columns");
      if (v) out.set(i, j, 1);
    }
  return out;
}

std::vector<ResolvedMatrix> column_resolutions(const BinaryMatrix& m, const ChargeResolution& res) {
  const std::vector<int> c = m.col_sums();
  resolve_charges(c, res);  // validates column index and split
  const int k = res.column;

  std::vector<int> one_rows;
  for (int i = 0; i < m.rows(); ++i)
    if (m.at(i, k)) one_rows.push_back(i);

  // Choose which 1s go left, ascending in the chosen row subsets.
  std::vector<ResolvedMatrix> fiber;
  std::vector<int> pick(res.left_part);
  auto rec = [&](auto&& self, int from, int depth) -> void {
    if (depth == res.left_part) {
      BinaryMatrix mt = BinaryMatrix::zeros(m.rows(), m.cols() + 1);
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
          if (!m.at(i, j)) continue;
          if (j < k)
            mt.set(i, j, 1);
          else if (j > k)
            mt.set(i, j + 1, 1);
        }
      std::vector<char> left(m.rows(), 0);
      for (int idx : pick) left[one_rows[idx]] = 1;
      for (int i : one_rows) mt.set(i, left[i] ? k : k + 1, 1);
      fiber.push_back({std::move(mt), k});
      return;
    }
    for (int idx = from; idx <= static_cast<int>(one_rows.size()) - (res.left_part - depth); ++idx) {
      pick[depth] = idx;
      self(self, idx + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return fiber;
}

std::vector<BinaryMatrix> maximal_resolutions(const BinaryMatrix& m) {
  const std::vector<int> c = m.col_sums();
  std::vector<std::vector<int>> one_rows(m.cols());
  int total = 0;
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i)
      if (m.at(i, j)) one_rows[j].push_back(i);
    total += c[j];
  }
  if (total == 0) throw std::invalid_argument("maximal_resolutions: matrix has no 1s");

  // Odometer over per-column permutations, leftmost column slowest.
  std::vector<std::vector<int>> perm(one_rows);
  std::vector<BinaryMatrix> out;
  auto emit = [&]() {
    BinaryMatrix mt = BinaryMatrix::zeros(m.rows(), total);
    int col = 0;
    for (int j = 0; j < m.cols(); ++j)
      for (int i : perm[j]) mt.set(i, col++, 1);
    out.push_back(std::move(mt));
  };
  auto rec = [&](auto&& self, int j) -> void {
    if (j == m.cols()) {
      emit();
      return;
    }
    std::sort(perm[j].begin(), perm[j].end());
    do {
      self(self, j + 1);
    } while (std::next_permutation(perm[j].begin(), perm[j].end()));
  };
  rec(rec, 0);
  return out;
}

struct ResolutionCompatibilityChecker::State {
  BctFamily family;
  FiniteRelation rel;
};

ResolutionCompatibilityChecker::ResolutionCompatibilityChecker(const MarginPair& margins,
                                                               const ChargeResolution& res)
    : res_(res) {
  const MarginPair resolved_margins{margins.row_sums, resolve_charges(margins.col_sums, res)};
  auto state = std::make_shared<State>();
  state->family = enumerate_bcts(resolved_margins);
  state->rel = secondary_relation(state->family);
  state_ = std::move(state);
}

std::vector<int> ResolutionCompatibilityChecker::fiber_indices(const BinaryMatrix& m) const {
  std::vector<int> idx;
  for (const ResolvedMatrix& rm : column_resolutions(m, res_)) {
    const auto found = state_->family.index_of(rm.matrix);
    if (!found) throw std::logic_error("column resolution left the resolved family");
    idx.push_back(*found);
  }
  return idx;
}

bool ResolutionCompatibilityChecker::compatible(const std::vector<int>& fiber1,
                                                const std::vector<int>& fiber2) const {
  for (int a : fiber1) {
    bool dominated = false;
    for (int b : fiber2)
      if (state_->rel.leq(b, a)) {  // some resolution of m2 below this one of m1
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

bool ResolutionCompatibilityChecker::compatible(const BinaryMatrix& m1,
                                                const BinaryMatrix& m2) const {
  return compatible(fiber_indices(m1), fiber_indices(m2));
}

bool check_resolution_compatibility(const BinaryMatrix& m1, const BinaryMatrix& m2,
                                    const ChargeResolution& res) {
  if (m1.margins() != m2.margins())
    throw std::invalid_argument("check_resolution_compatibility: margin mismatch");
  return ResolutionCompatibilityChecker(m1.margins(), res).compatible(m1, m2);
}

bool two_column_leq(const BinaryMatrix& m, const BinaryMatrix& m_prime) {
  if (m.cols() != 2 || m_prime.cols() != 2)
    throw std::invalid_argument("two_column_leq: matrices must have two columns");
  if (m.margins() != m_prime.margins())
    throw std::invalid_argument("two_column_leq: margin mismatch");
  const ZMatrix z = ZMatrix::difference(m, m_prime);
  return z.rows_admissible() && z.prefixes_dominated() && z.balanced();
}

}  // namespace bct
