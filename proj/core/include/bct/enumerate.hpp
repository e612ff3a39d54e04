#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bct/matrix.hpp"

namespace bct {

// The complete set BCT(r,c), enumerated in ascending lexicographic order of
// the row-major bitstring. Indices into `members` are stable across runs.
struct BctFamily {
  MarginPair margins;
  std::vector<BinaryMatrix> members;

  int size() const { return static_cast<int>(members.size()); }
  const BinaryMatrix& operator[](int idx) const { return members[idx]; }

  // Binary search over the canonical order.
  std::optional<int> index_of(const BinaryMatrix& m) const;
};

// Undirected graph on a family whose edges join tables differing by a single
// L2 <-> I2 interchange. Edge pairs are (smaller index, larger index), sorted.
struct InterchangeGraph {
  MarginPair margins;
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// Gale-Ryser: with c sorted decreasingly, BCT(r,c) is non-empty iff the
// totals agree and every prefix of c is dominated by the conjugate of r,
// i.e. sum of the first k entries of sorted c <= sum_j min(r_j, k).
bool gale_ryser_feasible(const MarginPair& margins);

// Backtracking row by row, choosing column subsets of size r_i with
// Gale-Ryser pruning on the residual margins. Returns the empty family when
// the margins are infeasible.
BctFamily enumerate_bcts(const MarginPair& margins);

InterchangeGraph interchange_graph(const BctFamily& family);

// Vacuously true on at most one vertex.
bool is_connected(const InterchangeGraph& graph);

}  // namespace bct
