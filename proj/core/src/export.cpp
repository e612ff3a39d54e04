#include "bct/export.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace bct {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json matrix_rows(const BinaryMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string matrix_to_json(const BinaryMatrix& m) {
  ordered_json j;
  j["rows"] = matrix_rows(m);
  return dump(j);
}

BinaryMatrix matrix_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw std::invalid_argument("matrix JSON must be an object with a \"rows\" array");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j["rows"]) rows.push_back(row.get<std::vector<int>>());
  return BinaryMatrix::from_rows(rows);
}

BinaryMatrix matrix_from_text_or_json(std::string_view text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '{') return matrix_from_json(text);
    break;
  }
  return BinaryMatrix::parse_text(text);
}

std::string family_to_json(const BctFamily& family) {
  ordered_json j;
  j["r"] = family.margins.row_sums;
  j["c"] = family.margins.col_sums;
  ordered_json members = ordered_json::array();
  for (const BinaryMatrix& m : family.members) members.push_back(matrix_rows(m));
  j["members"] = std::move(members);
  return dump(j);
}

std::string relation_to_json(const BctFamily& family, const FiniteRelation& rel) {
  ordered_json j;
  j["kind"] = to_string(rel.kind);
  j["r"] = family.margins.row_sums;
  j["c"] = family.margins.col_sums;
  j["size"] = rel.size();
  ordered_json pairs = ordered_json::array();
  for (int a = 0; a < rel.size(); ++a)
    rel.reach.for_each_in_row(a, [&](int b) {
      if (a != b) pairs.push_back(ordered_json::array({a, b}));
    });
  j["pairs"] = std::move(pairs);
  return dump(j);
}

std::string relation_to_csv(const FiniteRelation& rel) {
  std::string out = "upper,lower\n";
  for (int a = 0; a < rel.size(); ++a)
    rel.reach.for_each_in_row(a, [&](int b) {
      if (a != b) out += std::to_string(a) + "," + std::to_string(b) + "\n";
    });
  return out;
}

std::string hasse_to_dot(const BctFamily& family, const HasseDiagram& diagram) {
  std::string out = "digraph hasse {\n";
  for (const BinaryMatrix& m : family.members)
    out += "  \"" + m.bitstring() + "\";\n";
  for (auto [upper, lower] : diagram.cover_edges)
    out += "  \"" + family[upper].bitstring() + "\" -> \"" + family[lower].bitstring() + "\";\n";
  out += "}\n";
  return out;
}

std::string hasse_to_json(const BctFamily& family, const HasseDiagram& diagram) {
  ordered_json j;
  j["r"] = family.margins.row_sums;
  j["c"] = family.margins.col_sums;
  ordered_json nodes = ordered_json::array();
  for (const BinaryMatrix& m : family.members) nodes.push_back(m.bitstring());
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (auto [upper, lower] : diagram.cover_edges)
    edges.push_back(ordered_json::array({upper, lower}));
  j["cover_edges"] = std::move(edges);
  return dump(j);
}

std::string hasse_to_csv(const BctFamily& family, const HasseDiagram& diagram) {
  std::string out = "upper,lower\n";
  for (auto [upper, lower] : diagram.cover_edges)
    out += family[upper].bitstring() + "," + family[lower].bitstring() + "\n";
  return out;
}

std::string weight_label(const TangentWeight& w) {
  return "a" + std::to_string(w.numerator_col + 1) + "/a" +
         std::to_string(w.denominator_col + 1) + " h^" + std::to_string(w.hbar_exp);
}

std::string curves_to_dot(const BctFamily& family, const CurveDigraph& graph) {
  std::string out = "digraph curves {\n";
  for (const BinaryMatrix& m : family.members)
    out += "  \"" + m.bitstring() + "\";\n";
  for (const CurveArc& arc : graph.arcs)
    out += "  \"" + family[arc.source].bitstring() + "\" -> \"" +
           family[arc.target].bitstring() + "\" [label=\"" + weight_label(arc.weight) + "\"];\n";
  out += "}\n";
  return out;
}

namespace {

ordered_json block_json(const MatchedBlock& b) {
  ordered_json j;
  j["cols"] = ordered_json::array({b.left_col, b.right_col});
  j["rows"] = ordered_json::array({b.top_row, b.bottom_row});
  return j;
}

}  // namespace

std::string curves_to_json(const BctFamily& family, const CurveDigraph& graph,
                           bool include_moves) {
  ordered_json j;
  j["r"] = family.margins.row_sums;
  j["c"] = family.margins.col_sums;
  j["size"] = graph.vertex_count;
  ordered_json arcs = ordered_json::array();
  for (const CurveArc& arc : graph.arcs) {
    ordered_json a;
    a["source"] = arc.source;
    a["target"] = arc.target;
    a["weight"] = weight_label(arc.weight);
    a["block"] = block_json(arc.block);
    a["pencil_dim"] = 1;
    arcs.push_back(std::move(a));
  }
  j["arcs"] = std::move(arcs);
  if (include_moves) {
    ordered_json moves = ordered_json::array();
    for (const BlockSwapMove& move : graph.moves) {
      ordered_json mj;
      mj["source"] = move.source;
      mj["target"] = move.target;
      mj["weight"] = weight_label(move.weight);
      mj["block"] = block_json(move.block);
      mj["pencil_dim"] = move.pencil_dim();
      ordered_json comps = ordered_json::array();
      for (const MatchedBlock& c : move.components) comps.push_back(block_json(c));
      mj["components"] = std::move(comps);
      moves.push_back(std::move(mj));
    }
    j["moves"] = std::move(moves);
  }
  return dump(j);
}

std::string interchange_graph_to_json(const BctFamily& family, const InterchangeGraph& graph) {
  ordered_json j;
  j["r"] = family.margins.row_sums;
  j["c"] = family.margins.col_sums;
  j["size"] = graph.vertex_count;
  ordered_json edges = ordered_json::array();
  for (auto [a, b] : graph.edges) edges.push_back(ordered_json::array({a, b}));
  j["edges"] = std::move(edges);
  return dump(j);
}

std::string tie_to_json(const TieDiagram& ties) {
  ordered_json j;
  ordered_json list = ordered_json::array();
  for (auto [z, a] : ties.ties) list.push_back(ordered_json::array({z + 1, a + 1}));
  j["ties"] = std::move(list);
  return dump(j);
}

TieDiagram tie_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("ties") || !j["ties"].is_array())
    throw std::invalid_argument("tie JSON must be an object with a \"ties\" array");
  TieDiagram ties;
  for (const auto& pair : j["ties"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("tie JSON pairs must be [ns5, d5]");
    const int z = pair[0].get<int>();
    const int a = pair[1].get<int>();
    if (z < 1 || a < 1) throw std::invalid_argument("tie JSON pairs are 1-based");
    ties.ties.emplace_back(z - 1, a - 1);
  }
  std::sort(ties.ties.begin(), ties.ties.end());
  return ties;
}

}  // namespace bct
