#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bct/bit_table.hpp"
#include "bct/enumerate.hpp"

namespace bct {

enum class RelationKind { bruhat, secondary, geometric };

std::string to_string(RelationKind kind);

// A partial order over an enumerated family, stored as a reachability bit
// table: reach(a, b) is true iff member b <= member a (b lies weakly below a).
// The family itself is identified by its margins plus the canonical
// enumeration order.
struct FiniteRelation {
  RelationKind kind = RelationKind::bruhat;
  MarginPair margins;
  BitTable reach;

  int size() const { return reach.rows(); }
  bool leq(int lower, int upper) const { return reach.get(upper, lower); }

  // Ordered strict pairs (a, b) with b < a.
  int64_t strict_pair_count() const { return reach.count_all() - size(); }
};

// Transitive reduction of a relation: one (upper, lower) pair per cover.
struct HasseDiagram {
  MarginPair margins;
  int vertex_count = 0;
  std::vector<std::pair<int, int>> cover_edges;

  friend bool operator==(const HasseDiagram&, const HasseDiagram&) = default;
};

// Dominance order via pairwise partial-sum comparison.
FiniteRelation bruhat_relation(const BctFamily& family);

// Reflexive-transitive closure of the one-directional L2 -> I2 interchange
// moves.
FiniteRelation secondary_relation(const BctFamily& family);

// Cover edges straight from the cover criterion, without building the full
// closure. Equals hasse(secondary_relation(family)).
HasseDiagram secondary_hasse_direct(const BctFamily& family);

// Throws std::logic_error if the relation is not antisymmetric.
HasseDiagram hasse(const FiniteRelation& rel);

struct RelationComparison {
  bool equal = true;
  int64_t only_in_first_count = 0;
  int64_t only_in_second_count = 0;
  // Samples of ordered (upper, lower) pairs present in one relation only,
  // truncated to the report limit.
  std::vector<std::pair<int, int>> only_in_first;
  std::vector<std::pair<int, int>> only_in_second;
};

RelationComparison compare_relations(const FiniteRelation& rel1, const FiniteRelation& rel2,
                                     int report_limit = 32);

// Shared closure builder: arcs point downward (source strictly above target).
FiniteRelation closure_of_arcs(RelationKind kind, const MarginPair& margins, int vertex_count,
                               const std::vector<std::vector<int>>& arcs_out);

}  // namespace bct
