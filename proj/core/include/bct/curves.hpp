#pragma once

#include <vector>

#include "bct/enumerate.hpp"
#include "bct/matrix.hpp"
#include "bct/orders.hpp"

namespace bct {

// Two-column submatrix over a contiguous row range whose column sums agree.
// Canonical (trimmed) form: the boundary rows are affected, i.e. their
// pattern at (left_col, right_col) is (0,1) or (1,0).
struct MatchedBlock {
  int left_col = 0;
  int right_col = 0;
  int top_row = 0;
  int bottom_row = 0;  // inclusive

  friend bool operator==(const MatchedBlock&, const MatchedBlock&) = default;
  friend auto operator<=>(const MatchedBlock&, const MatchedBlock&) = default;
};

// Monomial a_{numerator}/a_{denominator} * hbar^{hbar_exp} attached to a
// block swap move: in the topmost affected row, the 1 at `numerator_col`
// becomes a 0 and the 0 at `denominator_col` becomes a 1.
struct TangentWeight {
  int numerator_col = 0;
  int denominator_col = 0;
  int hbar_exp = 0;

  friend bool operator==(const TangentWeight&, const TangentWeight&) = default;
  friend auto operator<=>(const TangentWeight&, const TangentWeight&) = default;
};

// Cocharacter t -> (t^{sigma(0)}, ..., t^{sigma(n-1)}, 1) selecting the flow
// direction; sigma is a permutation of {0..n-1}.
struct CocharacterSpec {
  std::vector<int> sigma;

  static CocharacterSpec identity(int n);
  bool is_permutation() const;
};

// A column swap on a matched block, together with its unique decomposition
// into minimal blocks. Indecomposable moves (one component) correspond to
// single curve pencils; k components give a dimension-k pencil.
struct BlockSwapMove {
  MatchedBlock block;
  std::vector<MatchedBlock> components;
  TangentWeight weight;
  int source = 0;
  int target = 0;

  int pencil_dim() const { return static_cast<int>(components.size()); }
};

struct CurveArc {
  int source = 0;
  int target = 0;
  TangentWeight weight;
  MatchedBlock block;
};

// Directed curves: one arc per indecomposable attractive move, plus the full
// move listing (decomposable moves included) with pencil dimensions.
struct CurveDigraph {
  MarginPair margins;
  int vertex_count = 0;
  std::vector<CurveArc> arcs;
  std::vector<BlockSwapMove> moves;
};

// All canonical matched blocks with at least one affected row, ascending in
// (left_col, right_col, top_row, bottom_row).
std::vector<MatchedBlock> matched_blocks(const BinaryMatrix& m);

// Minimal blocks obtained by scanning rows: a component opens at an affected
// row and closes at the first affected row where the (1,0) minus (0,1)
// imbalance returns to zero; separator rows between components are (0,0) or
// (1,1). Throws if the block is not matched.
std::vector<MatchedBlock> minimal_decomposition(const BinaryMatrix& m, const MatchedBlock& block);

// Swaps the two columns of the block within its row range (an involution).
BinaryMatrix apply_block_swap(const BinaryMatrix& m, const MatchedBlock& block);

// Weight from the topmost affected row i: with (i, q0) the 0 that becomes a
// 1 and (i, q1) the 1 that becomes a 0, the exponent is
// 1 + s(i, q0) - s(i, q1) with s the inclusive column prefix sum.
TangentWeight tangent_weight(const BinaryMatrix& m, const MatchedBlock& block);

// Pullback exponent sigma(q1) - sigma(q0) is positive.
bool is_attractive(const TangentWeight& weight, const CocharacterSpec& spec);

CurveDigraph curve_digraph(const BctFamily& family, const CocharacterSpec& spec);

// Reflexive-transitive closure of the attractive indecomposable arcs.
FiniteRelation geometric_relation(const BctFamily& family, const CocharacterSpec& spec);

// Debug operation: an explicit sequence of interchanges realizing a minimal
// block swap whose top row is (0,1). Applying the corners in order to m
// yields apply_block_swap(m, block).
std::vector<CornerSelection> interchange_witness(const BinaryMatrix& m, const MatchedBlock& block);

}  // namespace bct
