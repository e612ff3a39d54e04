#include "bct/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace bct {

std::optional<int> BctFamily::index_of(const BinaryMatrix& m) const {
  auto it = std::lower_bound(members.begin(), members.end(), m);
  if (it == members.end() || *it != m) return std::nullopt;
  return static_cast<int>(it - members.begin());
}

bool gale_ryser_feasible(const MarginPair& margins) {
  const auto& r = margins.row_sums;
  const auto& c = margins.col_sums;
  for (int v : r)
    if (v < 0) return false;
  for (int v : c)
    if (v < 0) return false;
  if (margins.row_total() != margins.col_total()) return false;

  std::vector<int> sorted_c(c);
  std::sort(sorted_c.begin(), sorted_c.end(), std::greater<>());
  long long c_prefix = 0;
  for (size_t k = 1; k <= sorted_c.size(); ++k) {
    c_prefix += sorted_c[k - 1];
    long long conj_prefix = 0;
    for (int rv : r) conj_prefix += std::min<long long>(rv, static_cast<long long>(k));
    if (c_prefix > conj_prefix) return false;
  }
  return true;
}

namespace {

// Enumeration context. Rows are filled top to bottom; inside a row columns
// are decided left to right with the 0 branch first, which makes the output
// ascend in row-major bitstring order without a final sort.
struct Enumerator {
  int m, n;
  const std::vector<int>& r;
  std::vector<int> resid;          // remaining column sums
  std::vector<long long> minsum;   // minsum[i*(n+1)+k] = sum_{j>=i} min(r[j], k)
  std::vector<int> count_buf;      // counting-sort buffer for residual check
  BinaryMatrix work;
  std::vector<BinaryMatrix> out;

  Enumerator(const MarginPair& margins)
      : m(margins.total_rows()),
        n(margins.total_cols()),
        r(margins.row_sums),
        resid(margins.col_sums),
        minsum(static_cast<size_t>(m + 1) * (n + 1), 0),
        count_buf(static_cast<size_t>(m) + 2, 0),
        work(BinaryMatrix::zeros(m, n)) {
    for (int i = m - 1; i >= 0; --i)
      for (int k = 0; k <= n; ++k)
        minsum[static_cast<size_t>(i) * (n + 1) + k] =
            minsum[static_cast<size_t>(i + 1) * (n + 1) + k] + std::min(r[i], k);
  }

  // Gale-Ryser on the residual problem (rows next_row.., column sums resid).
  // Row and column totals agree by construction, so only dominance is tested.
  bool residual_feasible(int next_row) {
    const int rows_left = m - next_row;
    std::fill(count_buf.begin(), count_buf.end(), 0);
    for (int v : resid) {
      if (v > rows_left) return false;
      ++count_buf[v];
    }
    long long c_prefix = 0;
    int k = 0;
    for (int v = rows_left; v >= 1 && k < n; --v) {
      for (int rep = 0; rep < count_buf[v] && k < n; ++rep) {
        c_prefix += v;
        ++k;
        if (c_prefix > minsum[static_cast<size_t>(next_row) * (n + 1) + k]) return false;
      }
    }
    return true;
  }

  void fill_row(int i, int j, int need) {
    if (j == n) {
      if (residual_feasible(i + 1)) next_row(i + 1);
      return;
    }
    if (need > n - j) return;
    // 0 branch first: column j must still be fillable by the rows below.
    if (resid[j] <= m - i - 1) fill_row(i, j + 1, need);
    if (need > 0 && resid[j] > 0) {
      work.set(i, j, 1);
      --resid[j];
      fill_row(i, j + 1, need - 1);
      ++resid[j];
      work.set(i, j, 0);
    }
  }

  void next_row(int i) {
    if (i == m) {
      out.push_back(work);
      return;
    }
    fill_row(i, 0, r[i]);
  }
};

}  // namespace

BctFamily enumerate_bcts(const MarginPair& margins) {
  BctFamily family;
  family.margins = margins;
  if (margins.total_rows() == 0 || margins.total_cols() == 0) return family;
  if (!gale_ryser_feasible(margins)) return family;
  Enumerator en(margins);
  en.next_row(0);
  family.members = std::move(en.out);
  return family;
}

InterchangeGraph interchange_graph(const BctFamily& family) {
  InterchangeGraph graph;
  graph.margins = family.margins;
  graph.vertex_count = family.size();
  for (int a = 0; a < family.size(); ++a) {
    for (const CornerSelection& sel : find_l2(family[a])) {
      const BinaryMatrix target = interchange(family[a], sel);
      const auto idx = family.index_of(target);
      if (!idx) throw std::logic_error("interchange left the enumerated family");
      graph.edges.emplace_back(std::min(a, *idx), std::max(a, *idx));
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
  return graph;
}

bool is_connected(const InterchangeGraph& graph) {
  const int n = graph.vertex_count;
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : graph.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

}  // namespace bct
