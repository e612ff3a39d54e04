#pragma once

#include <array>
#include <memory>
#include <vector>

#include "bct/matrix.hpp"

namespace bct {

// Split of a column-sum entry c_k >= 2 into two positive parts.
struct ChargeResolution {
  int column = 0;      // k, 0-based
  int left_part = 0;   // c'_k
  int right_part = 0;  // c''_k
};

// A member of BCT(r, resolved c) whose columns (k, k+1) never carry two 1s
// in the same row, remembering which original column was split.
struct ResolvedMatrix {
  BinaryMatrix matrix;
  int origin_column = 0;

  friend bool operator==(const ResolvedMatrix&, const ResolvedMatrix&) = default;
};

// Difference matrix of two two-column tables with shared margins; rows are
// one of (0,0), (1,-1), (-1,1) when admissible.
struct ZMatrix {
  std::vector<std::array<int, 2>> rows;

  static ZMatrix difference(const BinaryMatrix& m, const BinaryMatrix& m_prime);
  bool rows_admissible() const;      // (i)
  bool prefixes_dominated() const;   // (ii): #(1,-1) >= #(-1,1) on every prefix
  bool balanced() const;             // (iii): total counts agree
};

// Replaces c[k] >= 2 by the split pair; length grows by one.
std::vector<int> resolve_charges(const std::vector<int>& col_sums, const ChargeResolution& res);

// Inverse of column resolution: adds columns k and k+1. Throws if some row
// has both bits set.
BinaryMatrix merge_columns(const ResolvedMatrix& resolved);

// The full fiber over m: all ways of sending left_part of the column's 1s to
// the left sub-column, listed by ascending choice of left row subsets.
std::vector<ResolvedMatrix> column_resolutions(const BinaryMatrix& m, const ChargeResolution& res);

// Every column i replaced by c_i single-1 columns in all orders; the result
// lives in BCT(r, 1^d) and there are prod_i c_i! of them.
std::vector<BinaryMatrix> maximal_resolutions(const BinaryMatrix& m);

// Right-hand side of the resolution compatibility criterion: every
// resolution of m1 dominates some resolution of m2 in the secondary order on
// the resolved family. Callers compare against the direct order on (m1, m2).
bool check_resolution_compatibility(const BinaryMatrix& m1, const BinaryMatrix& m2,
                                    const ChargeResolution& res);

// Amortized form of the same check: the resolved family and its secondary
// order are built once, then pairs are tested via their fiber index lists.
class ResolutionCompatibilityChecker {
 public:
  ResolutionCompatibilityChecker(const MarginPair& margins, const ChargeResolution& res);

  std::vector<int> fiber_indices(const BinaryMatrix& m) const;
  bool compatible(const std::vector<int>& fiber1, const std::vector<int>& fiber2) const;
  bool compatible(const BinaryMatrix& m1, const BinaryMatrix& m2) const;

 private:
  ChargeResolution res_;
  struct State;
  std::shared_ptr<const State> state_;
};

// Two-column characterization: m_prime <= m in the secondary order iff
// Z = m_prime - m has admissible rows, dominated prefixes and balanced
// totals. O(rows), no interchange chains.
bool two_column_leq(const BinaryMatrix& m, const BinaryMatrix& m_prime);

}  // namespace bct
