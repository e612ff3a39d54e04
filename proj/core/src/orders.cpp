#include "bct/orders.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace bct {

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::bruhat: return "bruhat";
    case RelationKind::secondary: return "secondary";
    case RelationKind::geometric: return "geometric";
  }
  return "unknown";
}

FiniteRelation bruhat_relation(const BctFamily& family) {
  const int n = family.size();
  FiniteRelation rel{RelationKind::bruhat, family.margins, BitTable(n, n)};
  if (n == 0) return rel;
  const int cells = family[0].rows() * family[0].cols();

  // Flat partial-sum tables, one row of `cells` entries per member.
  std::vector<int16_t> sums(static_cast<size_t>(n) * cells);
  for (int a = 0; a < n; ++a) {
    const IntegerMatrix s = partial_sum_matrix(family[a]);
    for (int t = 0; t < cells; ++t) sums[static_cast<size_t>(a) * cells + t] = static_cast<int16_t>(s.values[t]);
  }

  for (int a = 0; a < n; ++a) {
    const int16_t* sa = sums.data() + static_cast<size_t>(a) * cells;
    for (int b = 0; b < n; ++b) {
      // b <= a iff the partial sums of b dominate those of a entrywise.
      const int16_t* sb = sums.data() + static_cast<size_t>(b) * cells;
      bool leq = true;
      for (int t = 0; t < cells; ++t)
        if (sb[t] < sa[t]) {
          leq = false;
          break;
        }
      if (leq) rel.reach.set(a, b);
    }
  }
  return rel;
}

FiniteRelation closure_of_arcs(RelationKind kind, const MarginPair& margins, int vertex_count,
                               const std::vector<std::vector<int>>& arcs_out) {
  FiniteRelation rel{kind, margins, BitTable(vertex_count, vertex_count)};
  for (int a = 0; a < vertex_count; ++a) rel.reach.set(a, a);
  // Downward arcs always point to a lexicographically larger member, so one
  // descending pass usually converges; the loop guards the general case.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = vertex_count - 1; a >= 0; --a)
      for (int target : arcs_out[a])
        if (rel.reach.or_rows(a, target)) changed = true;
  }
  return rel;
}

FiniteRelation secondary_relation(const BctFamily& family) {
  const int n = family.size();
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < n; ++a)
    for (const CornerSelection& sel : find_l2(family[a])) {
      const auto idx = family.index_of(interchange(family[a], sel));
      if (!idx) throw std::logic_error("interchange left the enumerated family");
      out[a].push_back(*idx);
    }
  return closure_of_arcs(RelationKind::secondary, family.margins, n, out);
}

HasseDiagram secondary_hasse_direct(const BctFamily& family) {
  HasseDiagram diagram{family.margins, family.size(), {}};
  for (int a = 0; a < family.size(); ++a)
    for (const CornerSelection& sel : find_l2(family[a]))
      if (is_secondary_cover(family[a], sel)) {
        const auto idx = family.index_of(interchange(family[a], sel));
        if (!idx) throw std::logic_error("interchange left the enumerated family");
        diagram.cover_edges.emplace_back(a, *idx);
      }
  std::sort(diagram.cover_edges.begin(), diagram.cover_edges.end());
  diagram.cover_edges.erase(std::unique(diagram.cover_edges.begin(), diagram.cover_edges.end()),
                            diagram.cover_edges.end());
  return diagram;
}

HasseDiagram hasse(const FiniteRelation& rel) {
  const int n = rel.size();
  const int words = rel.reach.words_per_row();
  HasseDiagram diagram{rel.margins, n, {}};
  std::vector<uint64_t> strict(words), acc(words), below(words);
  for (int a = 0; a < n; ++a) {
    auto row = rel.reach.row(a);
    std::copy(row.begin(), row.end(), strict.begin());
    strict[a >> 6] &= ~(uint64_t{1} << (a & 63));
    std::fill(acc.begin(), acc.end(), 0);
    for (int w = 0; w < words; ++w) {
      uint64_t bits = strict[w];
      while (bits) {
        const int b = w * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        if (rel.reach.get(b, a))
          throw std::logic_error("hasse: relation is not antisymmetric");
        auto row_b = rel.reach.row(b);
        for (int v = 0; v < words; ++v) below[v] = row_b[v];
        below[b >> 6] &= ~(uint64_t{1} << (b & 63));
        for (int v = 0; v < words; ++v) acc[v] |= below[v];
      }
    }
    for (int w = 0; w < words; ++w) {
      uint64_t covers = strict[w] & ~acc[w];
      while (covers) {
        const int b = w * 64 + __builtin_ctzll(covers);
        covers &= covers - 1;
        diagram.cover_edges.emplace_back(a, b);
      }
    }
  }
  std::sort(diagram.cover_edges.begin(), diagram.cover_edges.end());
  return diagram;
}

RelationComparison compare_relations(const FiniteRelation& rel1, const FiniteRelation& rel2,
                                     int report_limit) {
  if (rel1.margins != rel2.margins || rel1.size() != rel2.size())
    throw std::invalid_argument("compare_relations: relations over different families");
  RelationComparison cmp;
  const int n = rel1.size();
  const int words = rel1.reach.words_per_row();
  for (int a = 0; a < n; ++a) {
    auto r1 = rel1.reach.row(a);
    auto r2 = rel2.reach.row(a);
    for (int w = 0; w < words; ++w) {
      uint64_t first_only = r1[w] & ~r2[w];
      uint64_t second_only = r2[w] & ~r1[w];
      cmp.only_in_first_count += __builtin_popcountll(first_only);
      cmp.only_in_second_count += __builtin_popcountll(second_only);
      while (first_only && static_cast<int>(cmp.only_in_first.size()) < report_limit) {
        cmp.only_in_first.emplace_back(a, w * 64 + __builtin_ctzll(first_only));
        first_only &= first_only - 1;
      }
      while (second_only && static_cast<int>(cmp.only_in_second.size()) < report_limit) {
        cmp.only_in_second.emplace_back(a, w * 64 + __builtin_ctzll(second_only));
        second_only &= second_only - 1;
      }
    }
  }
  cmp.equal = cmp.only_in_first_count == 0 && cmp.only_in_second_count == 0;
  return cmp;
}

}  // namespace bct
