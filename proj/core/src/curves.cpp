#include "bct/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace bct {

CocharacterSpec CocharacterSpec::identity(int n) {
  CocharacterSpec spec;
  spec.sigma.resize(n);
  for (int i = 0; i < n; ++i) spec.sigma[i] = i;
  return spec;
}

bool CocharacterSpec::is_permutation() const {
  std::vector<char> seen(sigma.size(), 0);
  for (int v : sigma) {
    if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

namespace {

// diff[i] = m[i][left] - m[i][right]; nonzero entries mark affected rows.
std::vector<int> column_diff(const BinaryMatrix& m, int left_col, int right_col) {
  std::vector<int> diff(m.rows());
  for (int i = 0; i < m.rows(); ++i) diff[i] = m.at(i, left_col) - m.at(i, right_col);
  return diff;
}

void require_in_range(const BinaryMatrix& m, const MatchedBlock& b) {
  if (b.left_col < 0 || b.right_col >= m.cols() || b.left_col >= b.right_col ||
      b.top_row < 0 || b.bottom_row >= m.rows() || b.top_row > b.bottom_row)
    throw std::invalid_argument("matched block out of range");
}

void require_matched(const BinaryMatrix& m, const MatchedBlock& b) {
  require_in_range(m, b);
  int sum = 0;
  for (int i = b.top_row; i <= b.bottom_row; ++i)
    sum += m.at(i, b.left_col) - m.at(i, b.right_col);
  if (sum != 0) throw std::invalid_argument("block is not matched");
}

}  // namespace

std::vector<MatchedBlock> matched_blocks(const BinaryMatrix& m) {
  std::vector<MatchedBlock> out;
  for (int k = 0; k < m.cols(); ++k)
    for (int l = k + 1; l < m.cols(); ++l) {
      const std::vector<int> diff = column_diff(m, k, l);
      for (int top = 0; top < m.rows(); ++top) {
        if (diff[top] == 0) continue;
        int sum = 0;
        for (int bot = top; bot < m.rows(); ++bot) {
          sum += diff[bot];
          if (sum == 0 && diff[bot] != 0) out.push_back({k, l, top, bot});
        }
      }
    }
  return out;
}

std::vector<MatchedBlock> minimal_decomposition(const BinaryMatrix& m, const MatchedBlock& block) {
  require_matched(m, block);
  std::vector<MatchedBlock> components;
  const std::vector<int> diff = column_diff(m, block.left_col, block.right_col);
  int open_at = -1;
  int imbalance = 0;
  for (int i = block.top_row; i <= block.bottom_row; ++i) {
    if (diff[i] == 0) continue;  // separator outside a component, interior row inside
    if (open_at < 0) open_at = i;
    imbalance += diff[i];
    if (imbalance == 0) {
      components.push_back({block.left_col, block.right_col, open_at, i});
      open_at = -1;
    }
  }
  if (open_at >= 0) throw std::logic_error("matched block left an open component");
  return components;
}

BinaryMatrix apply_block_swap(const BinaryMatrix& m, const MatchedBlock& block) {
  require_matched(m, block);
  BinaryMatrix out = m;
  for (int i = block.top_row; i <= block.bottom_row; ++i) {
    const int a = m.at(i, block.left_col);
    const int b = m.at(i, block.right_col);
    out.set(i, block.left_col, b);
    out.set(i, block.right_col, a);
  }
  return out;
}

TangentWeight tangent_weight(const BinaryMatrix& m, const MatchedBlock& block) {
  require_matched(m, block);
  const int i = block.top_row;
  const int left = m.at(i, block.left_col);
  const int right = m.at(i, block.right_col);
  if (left == right) throw std::invalid_argument("tangent_weight: top row not affected");
  TangentWeight w;
  if (left == 0) {
    w.denominator_col = block.left_col;  // the 0 that becomes a 1
    w.numerator_col = block.right_col;   // the 1 that becomes a 0
  } else {
    w.denominator_col = block.right_col;
    w.numerator_col = block.left_col;
  }
  w.hbar_exp = 1 + column_prefix_sum(m, i, w.denominator_col) -
               column_prefix_sum(m, i, w.numerator_col);
  return w;
}

bool is_attractive(const TangentWeight& weight, const CocharacterSpec& spec) {
  return spec.sigma[weight.numerator_col] > spec.sigma[weight.denominator_col];
}

CurveDigraph curve_digraph(const BctFamily& family, const CocharacterSpec& spec) {
  if (family.size() > 0 &&
      (static_cast<int>(spec.sigma.size()) != family[0].cols() || !spec.is_permutation()))
    throw std::invalid_argument("curve_digraph: sigma is not a permutation of the columns");
  CurveDigraph graph;
  graph.margins = family.margins;
  graph.vertex_count = family.size();
  for (int a = 0; a < family.size(); ++a) {
    for (const MatchedBlock& block : matched_blocks(family[a])) {
      BlockSwapMove move;
      move.block = block;
      move.components = minimal_decomposition(family[a], block);
      move.weight = tangent_weight(family[a], block);
      move.source = a;
      const auto idx = family.index_of(apply_block_swap(family[a], block));
      if (!idx) throw std::logic_error("block swap left the enumerated family");
      move.target = *idx;
      if (move.pencil_dim() == 1 && is_attractive(move.weight, spec))
        graph.arcs.push_back({a, move.target, move.weight, block});
      graph.moves.push_back(std::move(move));
    }
  }
  return graph;
}

FiniteRelation geometric_relation(const BctFamily& family, const CocharacterSpec& spec) {
  const CurveDigraph graph = curve_digraph(family, spec);
  std::vector<std::vector<int>> out(family.size());
  for (const CurveArc& arc : graph.arcs) out[arc.source].push_back(arc.target);
  return closure_of_arcs(RelationKind::geometric, family.margins, family.size(), out);
}

namespace {

void witness_rec(BinaryMatrix& current, int left_col, int right_col, int top, int bottom,
                 std::vector<CornerSelection>& out) {
  if (current.at(top, left_col) != 0 || current.at(bottom, left_col) != 1)
    throw std::logic_error("witness: component boundary rows are not (0,1)/(1,0)");
  const CornerSelection sel{top, bottom, left_col, right_col};
  out.push_back(sel);
  current = interchange(current, sel);
  // Interior affected rows are untouched by the interchange; recurse on the
  // minimal components between the first and last of them.
  int first = -1, last = -1;
  for (int i = top + 1; i < bottom; ++i)
    if (current.at(i, left_col) != current.at(i, right_col)) {
      if (first < 0) first = i;
      last = i;
    }
  if (first < 0) return;
  const auto components =
      minimal_decomposition(current, {left_col, right_col, first, last});
  for (const MatchedBlock& comp : components)
    witness_rec(current, left_col, right_col, comp.top_row, comp.bottom_row, out);
}

}  // namespace

std::vector<CornerSelection> interchange_witness(const BinaryMatrix& m, const MatchedBlock& block) {
  require_matched(m, block);
  const auto components = minimal_decomposition(m, block);
  if (components.size() != 1 || components.front() != block)
    throw std::invalid_argument("interchange_witness: block is not minimal canonical");
  if (m.at(block.top_row, block.left_col) != 0)
    throw std::invalid_argument("interchange_witness: top row must be (0,1)");
  std::vector<CornerSelection> out;
  BinaryMatrix current = m;
  witness_rec(current, block.left_col, block.right_col, block.top_row, block.bottom_row, out);
  return out;
}

}  // namespace bct
