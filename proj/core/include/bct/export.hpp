#pragma once

#include <string>
#include <string_view>

#include "bct/brane.hpp"
#include "bct/curves.hpp"
#include "bct/enumerate.hpp"
#include "bct/orders.hpp"

namespace bct {

// Deterministic text emitters. Nodes are labeled by row-major bitstrings;
// identical inputs produce byte-identical output.

std::string matrix_to_json(const BinaryMatrix& m);
// Accepts {"rows": [[0,1],[1,0]]}.
BinaryMatrix matrix_from_json(std::string_view text);
// Dispatch: JSON object when the text starts with '{', matrix text otherwise.
BinaryMatrix matrix_from_text_or_json(std::string_view text);

std::string family_to_json(const BctFamily& family);

std::string relation_to_json(const BctFamily& family, const FiniteRelation& rel);
std::string relation_to_csv(const FiniteRelation& rel);

std::string hasse_to_dot(const BctFamily& family, const HasseDiagram& diagram);
std::string hasse_to_json(const BctFamily& family, const HasseDiagram& diagram);
std::string hasse_to_csv(const BctFamily& family, const HasseDiagram& diagram);

// Weight label "a{q1}/a{q0} h^{d}" with 1-based column numbers.
std::string weight_label(const TangentWeight& weight);

std::string curves_to_dot(const BctFamily& family, const CurveDigraph& graph);
std::string curves_to_json(const BctFamily& family, const CurveDigraph& graph,
                           bool include_moves = false);

std::string interchange_graph_to_json(const BctFamily& family, const InterchangeGraph& graph);

// Wire form {"ties": [[z,a], ...]}, 1-based on the wire, 0-based in memory.
std::string tie_to_json(const TieDiagram& ties);
TieDiagram tie_from_json(std::string_view text);

}  // namespace bct
