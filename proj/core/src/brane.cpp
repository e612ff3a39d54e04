#include "bct/brane.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bct {

int BraneDiagram::ns5_count() const {
  return static_cast<int>(std::count(fivebranes.begin(), fivebranes.end(), Fivebrane::ns5));
}

int BraneDiagram::d5_count() const {
  return static_cast<int>(std::count(fivebranes.begin(), fivebranes.end(), Fivebrane::d5));
}

std::vector<int> BraneDiagram::ns5_positions() const {
  std::vector<int> out;
  for (int p = 0; p < fivebrane_count(); ++p)
    if (fivebranes[p] == Fivebrane::ns5) out.push_back(p);
  return out;
}

std::vector<int> BraneDiagram::d5_positions() const {
  std::vector<int> out;
  for (int p = 0; p < fivebrane_count(); ++p)
    if (fivebranes[p] == Fivebrane::d5) out.push_back(p);
  return out;
}

int BraneDiagram::dim_left_of(int fb) const { return fb == 0 ? 0 : d3_dims[fb - 1]; }

int BraneDiagram::dim_right_of(int fb) const {
  return fb == fivebrane_count() - 1 ? 0 : d3_dims[fb];
}

bool BraneDiagram::conformant() const {
  return std::all_of(d3_dims.begin(), d3_dims.end(), [](int d) { return d > 0; });
}

BraneDiagram parse_diagram(std::string_view text) {
  BraneDiagram diagram;
  bool have_number = false;
  int number = 0;
  for (char ch : text) {
    if (ch == '\n' || ch == '\r' || ch == ' ' || ch == '\t') continue;
    if (ch >= '0' && ch <= '9') {
      if (diagram.fivebranes.empty())
        throw std::invalid_argument("parse_diagram: dimension before the first fivebrane");
      number = number * 10 + (ch - '0');
      have_number = true;
      continue;
    }
    if (ch != '/' && ch != '\\')
      throw std::invalid_argument("parse_diagram: unexpected character");
    if (!diagram.fivebranes.empty()) {
      if (!have_number)
        throw std::invalid_argument("parse_diagram: missing dimension between fivebranes");
      diagram.d3_dims.push_back(number);
    }
    diagram.fivebranes.push_back(ch == '/' ? Fivebrane::ns5 : Fivebrane::d5);
    number = 0;
    have_number = false;
  }
  if (diagram.fivebranes.empty())
    throw std::invalid_argument("parse_diagram: no fivebranes");
  if (have_number)
    throw std::invalid_argument("parse_diagram: trailing dimension after the last fivebrane");
  return diagram;
}

std::string format_diagram(const BraneDiagram& diagram) {
  std::string out;
  for (int p = 0; p < diagram.fivebrane_count(); ++p) {
    out.push_back(diagram.fivebranes[p] == Fivebrane::ns5 ? '/' : '\\');
    if (p + 1 < diagram.fivebrane_count()) out += std::to_string(diagram.d3_dims[p]);
  }
  return out;
}

MarginPair charges(const BraneDiagram& diagram) {
  MarginPair margins;
  int d5_left = 0;
  const int total_ns5 = diagram.ns5_count();
  int ns5_seen = 0;
  for (int p = 0; p < diagram.fivebrane_count(); ++p) {
    const int delta_right = diagram.dim_right_of(p);
    const int delta_left = diagram.dim_left_of(p);
    if (diagram.fivebranes[p] == Fivebrane::ns5) {
      margins.row_sums.push_back(delta_right - delta_left + d5_left);
      ++ns5_seen;
    } else {
      margins.col_sums.push_back(delta_left - delta_right + (total_ns5 - ns5_seen));
      ++d5_left;
    }
  }
  return margins;
}

BraneDiagram hw_step(const BraneDiagram& diagram, int position, HwDirection direction) {
  if (position < 0 || position + 1 >= diagram.fivebrane_count())
    throw std::invalid_argument("hw_step: position out of range");
  const Fivebrane left = diagram.fivebranes[position];
  const Fivebrane right = diagram.fivebranes[position + 1];
  const bool want_forward = direction == HwDirection::forward;
  if (want_forward && (left != Fivebrane::ns5 || right != Fivebrane::d5))
    throw std::invalid_argument("hw_step: forward step needs an NS5-D5 pair");
  if (!want_forward && (left != Fivebrane::d5 || right != Fivebrane::ns5))
    throw std::invalid_argument("hw_step: backward step needs a D5-NS5 pair");
  const int d1 = diagram.dim_left_of(position);
  const int d2 = diagram.d3_dims[position];
  const int d3 = diagram.dim_right_of(position + 1);
  const int d2_new = d1 + d3 - d2 + 1;
  if (d2_new < 0) throw std::invalid_argument("hw_step: step would produce a negative dimension");
  BraneDiagram out = diagram;
  std::swap(out.fivebranes[position], out.fivebranes[position + 1]);
  out.d3_dims[position] = d2_new;
  return out;
}

namespace {

bool no_pair_in_order(const BraneDiagram& d, Fivebrane first, Fivebrane second) {
  bool seen_first = false;
  for (Fivebrane fb : d.fivebranes) {
    if (fb == first) seen_first = true;
    if (fb == second && seen_first) return false;
  }
  return true;
}

}  // namespace

bool is_separated(const BraneDiagram& diagram) {
  return no_pair_in_order(diagram, Fivebrane::d5, Fivebrane::ns5);
}

bool is_co_separated(const BraneDiagram& diagram) {
  return no_pair_in_order(diagram, Fivebrane::ns5, Fivebrane::d5);
}

BraneDiagram separated_diagram(const MarginPair& margins) {
  if (margins.row_total() != margins.col_total())
    throw std::invalid_argument("separated_diagram: margin totals differ");
  const int m = margins.total_rows();
  const int n = margins.total_cols();
  if (m < 1 || n < 1) throw std::invalid_argument("separated_diagram: empty margins");
  BraneDiagram diagram;
  diagram.fivebranes.assign(m, Fivebrane::ns5);
  diagram.fivebranes.insert(diagram.fivebranes.end(), n, Fivebrane::d5);
  int running = 0;
  for (int i = 0; i + 1 < m; ++i) {
    running += margins.row_sums[i];
    diagram.d3_dims.push_back(running);
  }
  diagram.d3_dims.push_back(static_cast<int>(margins.row_total()));
  int suffix = static_cast<int>(margins.col_total());
  for (int j = 0; j + 1 < n; ++j) {
    suffix -= margins.col_sums[j];
    diagram.d3_dims.push_back(suffix);
  }
  return diagram;
}

namespace {

struct TieGeometry {
  std::vector<int> ns5_pos;
  std::vector<int> d5_pos;
  int gap_count = 0;

  explicit TieGeometry(const BraneDiagram& d)
      : ns5_pos(d.ns5_positions()), d5_pos(d.d5_positions()), gap_count(d.fivebrane_count() - 1) {}

  // Gaps covered by a tie are those strictly between the two fivebranes:
  // [min_pos, max_pos - 1] as gap indices.
  std::pair<int, int> gap_range(int z, int a) const {
    const int p = ns5_pos[z];
    const int q = d5_pos[a];
    return {std::min(p, q), std::max(p, q) - 1};
  }
};

}  // namespace

bool is_valid_tie_diagram(const BraneDiagram& diagram, const TieDiagram& ties) {
  const TieGeometry geo(diagram);
  std::vector<int> coverage(geo.gap_count, 0);
  std::vector<std::pair<int, int>> seen;
  for (auto [z, a] : ties.ties) {
    if (z < 0 || z >= static_cast<int>(geo.ns5_pos.size()) || a < 0 ||
        a >= static_cast<int>(geo.d5_pos.size()))
      return false;
    seen.emplace_back(z, a);
    const auto [lo, hi] = geo.gap_range(z, a);
    for (int g = lo; g <= hi; ++g) ++coverage[g];
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  return coverage == diagram.d3_dims;
}

std::vector<TieDiagram> enumerate_tie_diagrams(const BraneDiagram& diagram) {
  const TieGeometry geo(diagram);
  const int zs = static_cast<int>(geo.ns5_pos.size());
  const int as = static_cast<int>(geo.d5_pos.size());
  const int pair_count = zs * as;

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(pair_count);
  for (int z = 0; z < zs; ++z)
    for (int a = 0; a < as; ++a) pairs.emplace_back(z, a);

  // remaining[g] = undecided pairs that could still cover gap g
  std::vector<int> coverage(geo.gap_count, 0), remaining(geo.gap_count, 0);
  for (auto [z, a] : pairs) {
    const auto [lo, hi] = geo.gap_range(z, a);
    for (int g = lo; g <= hi; ++g) ++remaining[g];
  }

  std::vector<TieDiagram> out;
  std::vector<std::pair<int, int>> chosen;

  auto feasible = [&](int lo, int hi) {
    for (int g = lo; g <= hi; ++g)
      if (coverage[g] + remaining[g] < diagram.d3_dims[g]) return false;
    return true;
  };

  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == pair_count) {
      if (coverage == diagram.d3_dims) {
        TieDiagram t;
        t.ties = chosen;
        out.push_back(std::move(t));
      }
      return;
    }
    const auto [lo, hi] = geo.gap_range(pairs[idx].first, pairs[idx].second);
    for (int g = lo; g <= hi; ++g) --remaining[g];

    // exclude the pair
    if (feasible(lo, hi)) self(self, idx + 1);

    // include the pair
    bool ok = true;
    for (int g = lo; g <= hi; ++g)
      if (coverage[g] + 1 > diagram.d3_dims[g]) {
        ok = false;
        break;
      }
    if (ok) {
      for (int g = lo; g <= hi; ++g) ++coverage[g];
      chosen.push_back(pairs[idx]);
      self(self, idx + 1);
      chosen.pop_back();
      for (int g = lo; g <= hi; ++g) --coverage[g];
    }

    for (int g = lo; g <= hi; ++g) ++remaining[g];
  };
  rec(rec, 0);

  for (TieDiagram& t : out) std::sort(t.ties.begin(), t.ties.end());
  std::sort(out.begin(), out.end());
  return out;
}

BinaryMatrix tie_to_bct(const BraneDiagram& diagram, const TieDiagram& ties) {
  if (!is_valid_tie_diagram(diagram, ties))
    throw std::invalid_argument("tie_to_bct: invalid tie diagram");
  const TieGeometry geo(diagram);
  const int m = static_cast<int>(geo.ns5_pos.size());
  const int n = static_cast<int>(geo.d5_pos.size());
  if (m == 0 || n == 0) throw std::invalid_argument("tie_to_bct: need NS5 and D5 branes");
  std::vector<std::vector<char>> is_tie(m, std::vector<char>(n, 0));
  for (auto [z, a] : ties.ties) is_tie[z][a] = 1;
  BinaryMatrix out = BinaryMatrix::zeros(m, n);
  for (int z = 0; z < m; ++z)
    for (int a = 0; a < n; ++a) {
      const bool ns5_left = geo.ns5_pos[z] < geo.d5_pos[a];
      if (is_tie[z][a] == ns5_left) out.set(z, a, 1);  // tie & left, or no tie & right
    }
  return out;
}

TieDiagram bct_to_tie(const BraneDiagram& diagram, const BinaryMatrix& m) {
  if (m.margins() != charges(diagram))
    throw std::invalid_argument("bct_to_tie: matrix margins do not match the diagram charges");
  const TieGeometry geo(diagram);
  TieDiagram ties;
  for (int z = 0; z < m.rows(); ++z)
    for (int a = 0; a < m.cols(); ++a) {
      const bool ns5_left = geo.ns5_pos[z] < geo.d5_pos[a];
      if ((m.at(z, a) == 1) == ns5_left) ties.ties.emplace_back(z, a);
    }
  std::sort(ties.ties.begin(), ties.ties.end());
  if (!is_valid_tie_diagram(diagram, ties))
    throw std::logic_error("bct_to_tie: produced an invalid tie diagram");
  return ties;
}

}  // namespace bct
