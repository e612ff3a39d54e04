// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Usage: bct_acceptance [N]  (no argument runs all twelve).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bct/brane.hpp"
#include "bct/curves.hpp"
#include "bct/enumerate.hpp"
#include "bct/matrix.hpp"
#include "bct/orders.hpp"
#include "bct/resolution.hpp"
#include "bct/sweep.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace bct;
using namespace bct_test;

namespace {

struct Checker {
  bool ok = true;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

// 1. family counts with time budgets
bool criterion_counts(Checker& ck) {
  auto timed_count = [&](const MarginPair& margins, int expected, double budget) {
    const double t0 = now_seconds();
    const int got = enumerate_bcts(margins).size();
    const double dt = now_seconds() - t0;
    ck.expect(got == expected, "count " + std::to_string(got) + " != " + std::to_string(expected));
    ck.expect(dt < budget, "count took " + std::to_string(dt) + "s");
  };
  timed_count(fig1_margins(), 5, 1.0);
  timed_count(counterexample_margins(), 89, 1.0);
  timed_count(mp({3, 3, 3, 3, 3, 3}, {3, 3, 3, 3, 3, 3}), 297200, 60.0);
  return ck.ok;
}

// 2. the diamond Hasse diagram, identical for both combinatorial orders
bool criterion_figure1(Checker& ck) {
  const BctFamily family = enumerate_bcts(fig1_margins());
  ck.expect(family.size() == 5, "family size");
  const std::set<BinaryMatrix> displayed{fig1_middle(), fig1_bottom_left(), fig1_bottom_right(),
                                         fig1_top_left(), fig1_top_right()};
  ck.expect(std::set<BinaryMatrix>(family.members.begin(), family.members.end()) == displayed,
            "the five displayed matrices");

  const HasseDiagram from_bruhat = hasse(bruhat_relation(family));
  const HasseDiagram from_secondary = hasse(secondary_relation(family));
  const HasseDiagram direct = secondary_hasse_direct(family);
  ck.expect(from_bruhat == from_secondary, "orders give identical Hasse diagrams");
  ck.expect(from_secondary == direct, "direct cover edges");

  const int middle = *family.index_of(fig1_middle());
  std::vector<std::pair<int, int>> expected{
      {middle, *family.index_of(fig1_bottom_left())},
      {middle, *family.index_of(fig1_bottom_right())},
      {*family.index_of(fig1_top_left()), middle},
      {*family.index_of(fig1_top_right()), middle}};
  std::sort(expected.begin(), expected.end());
  ck.expect(from_bruhat.cover_edges == expected, "four-cover-edge diamond at displayed levels");
  return ck.ok;
}

// 3. the 6x6 pair: dominance holds, interchange order does not
bool criterion_counterexample(Checker& ck) {
  const double t0 = now_seconds();
  const BctFamily family = enumerate_bcts(counterexample_margins());
  const int m1 = *family.index_of(counterexample_m1());
  const int m2 = *family.index_of(counterexample_m2());
  ck.expect(leq_bruhat(counterexample_m1(), counterexample_m2()), "m1 <=_B m2");
  ck.expect(!secondary_relation(family).leq(m1, m2), "m1 is not below m2 in the secondary order");
  ck.expect(now_seconds() - t0 < 120.0, "time budget");
  return ck.ok;
}

// 4. geometric equals secondary on every margin pair up to total 7
bool criterion_main_theorem_sweep(Checker& ck) {
  const double t0 = now_seconds();
  SweepConfig config;
  config.max_total = 7;
  config.kinds = {RelationKind::secondary, RelationKind::geometric};
  const VerificationReport report = run_sweep(config);
  ck.expect(report.all_equal, "sweep all-equal");
  ck.expect(report.pairs.size() > 0, "sweep nonempty");
  ck.expect(now_seconds() - t0 < 120.0, "time budget");
  return ck.ok;
}

// 5. sigma-twisted geometric order equals the column-relabeled secondary one
bool criterion_sigma_covariance(Checker& ck) {
  std::mt19937 rng(20250808);
  for_each_margin_pair(6, [&](const MarginPair& margins) {
    if (!ck.ok) return;
    const BctFamily family = enumerate_bcts(margins);
    if (family.size() == 0) return;
    const int n = margins.total_cols();
    for (int round = 0; round < 20; ++round) {
      std::vector<int> sigma(n);
      for (int q = 0; q < n; ++q) sigma[q] = q;
      for (int q = n - 1; q > 0; --q)  // explicit shuffle, stable across stdlibs
        std::swap(sigma[q], sigma[rng() % (q + 1)]);

      MarginPair relabeled = margins;
      for (int q = 0; q < n; ++q) relabeled.col_sums[sigma[q]] = margins.col_sums[q];
      const BctFamily other = enumerate_bcts(relabeled);
      if (other.size() != family.size()) {
        ck.expect(false, "relabeled family size");
        return;
      }
      std::vector<int> to_other(family.size());
      for (int a = 0; a < family.size(); ++a) {
        BinaryMatrix moved = BinaryMatrix::zeros(family[a].rows(), n);
        for (int i = 0; i < family[a].rows(); ++i)
          for (int q = 0; q < n; ++q)
            if (family[a].at(i, q)) moved.set(i, sigma[q], 1);
        const auto idx = other.index_of(moved);
        if (!idx) {
          ck.expect(false, "relabeled member missing");
          return;
        }
        to_other[a] = *idx;
      }
      const FiniteRelation twisted = geometric_relation(family, CocharacterSpec{sigma});
      const FiniteRelation straight = secondary_relation(other);
      for (int a = 0; a < family.size() && ck.ok; ++a)
        for (int b = 0; b < family.size(); ++b)
          if (twisted.leq(b, a) != straight.leq(to_other[b], to_other[a])) {
            ck.expect(false, "twisted order mismatch");
            break;
          }
      if (!ck.ok) return;
    }
  });
  return ck.ok;
}

// 6. known coincidence families for the two combinatorial orders
bool criterion_coincidence(Checker& ck) {
  for (int n = 1; n <= 5 && ck.ok; ++n)
    for (int k = 1; k <= n && ck.ok; ++k) {
      const MarginPair margins = mp(std::vector<int>(n, k), std::vector<int>(n, k));
      const BctFamily family = enumerate_bcts(margins);
      ck.expect(family.size() > 0, "k^n family nonempty");
      ck.expect(compare_relations(bruhat_relation(family), secondary_relation(family)).equal,
                "orders coincide on k^n margins");
    }
  for (int total = 1; total <= 7 && ck.ok; ++total) {
    std::vector<std::vector<int>> column_choices;
    column_choices.push_back(std::vector<int>(total, 1));
    if (total % 2 == 0) column_choices.push_back(std::vector<int>(total / 2, 2));
    for (const std::vector<int>& c : column_choices)
      for_each_composition(total, [&](const std::vector<int>& r) {
        if (!ck.ok) return;
        const BctFamily family = enumerate_bcts({r, c});
        if (family.size() == 0) return;
        ck.expect(compare_relations(bruhat_relation(family), secondary_relation(family)).equal,
                  "orders coincide on 1^n / 2^n column margins");
      });
  }
  return ck.ok;
}

// 7. the cover criterion matches the transitive reduction everywhere
bool criterion_cover_criterion(Checker& ck) {
  for_each_margin_pair(7, [&](const MarginPair& margins) {
    if (!ck.ok) return;
    const BctFamily family = enumerate_bcts(margins);
    if (family.size() == 0) return;
    ck.expect(secondary_hasse_direct(family) == hasse(secondary_relation(family)),
              "direct covers equal reduction");
  });
  return ck.ok;
}

// 8. block decomposition structure and covers as curves
bool criterion_curve_structure(Checker& ck) {
  const BinaryMatrix host = eleven_row_block_host();
  const auto components = minimal_decomposition(host, {0, 1, 0, 10});
  ck.expect(components ==
                std::vector<MatchedBlock>{{0, 1, 0, 1}, {0, 1, 3, 7}, {0, 1, 9, 10}},
            "eleven-row block splits into three minimal blocks");

  for_each_margin_pair(7, [&](const MarginPair& margins) {
    if (!ck.ok) return;
    const BctFamily family = enumerate_bcts(margins);
    if (family.size() == 0) return;
    const CocharacterSpec id = CocharacterSpec::identity(margins.total_cols());
    const CurveDigraph graph = curve_digraph(family, id);
    for (const BlockSwapMove& move : graph.moves)
      for (const MatchedBlock& comp : move.components) {
        const BinaryMatrix& m = family[move.source];
        const int top = m.at(comp.top_row, comp.left_col);
        const int bot = m.at(comp.bottom_row, comp.left_col);
        if (top == m.at(comp.top_row, comp.right_col) ||
            bot == m.at(comp.bottom_row, comp.right_col) || top == bot) {
          ck.expect(false, "minimal block boundary rows");
          return;
        }
      }
    std::set<std::pair<int, int>> arcs;
    for (const CurveArc& arc : graph.arcs) arcs.insert({arc.source, arc.target});
    for (auto [upper, lower] : secondary_hasse_direct(family).cover_edges)
      if (!arcs.count({upper, lower})) {
        ck.expect(false, "cover without an indecomposable attractive move");
        return;
      }
  });
  return ck.ok;
}

// 9. curves and interchanges diverge on (1,1,1,1)/(2,2) with equal orders
bool criterion_figure2(Checker& ck) {
  const BctFamily family = enumerate_bcts(fig2_margins());
  ck.expect(family.size() == 6, "family size");
  const int top = *family.index_of(fig2_top());
  const int bottom = *family.index_of(fig2_bottom());

  const CurveDigraph graph = curve_digraph(family, CocharacterSpec::identity(2));
  std::set<std::pair<int, int>> arc_pairs;
  for (const CurveArc& arc : graph.arcs)
    arc_pairs.insert({std::min(arc.source, arc.target), std::max(arc.source, arc.target)});
  std::set<std::pair<int, int>> interchange_pairs;
  for (auto [a, b] : interchange_graph(family).edges) interchange_pairs.insert({a, b});

  ck.expect(arc_pairs != interchange_pairs, "arc set differs from interchange set");
  const std::pair<int, int> vertical{std::min(top, bottom), std::max(top, bottom)};
  ck.expect(arc_pairs.count(vertical) == 1, "top-bottom curve exists");
  ck.expect(interchange_pairs.count(vertical) == 0, "top-bottom curve is not an interchange");
  ck.expect(compare_relations(geometric_relation(family, CocharacterSpec::identity(2)),
                              secondary_relation(family))
                .equal,
            "generated orders coincide");
  return ck.ok;
}

// 10. brane calculus
bool criterion_brane(Checker& ck) {
  const double t0 = now_seconds();
  const BraneDiagram diagram = parse_diagram(example_diagram_text());
  ck.expect(charges(diagram) == mp({2, 1, 1, 2, 3, 2}, {5, 2, 2, 0, 2}), "charges");

  const auto ties = enumerate_tie_diagrams(diagram);
  ck.expect(ties.size() == 123, "123 tie diagrams");
  for (const TieDiagram& t : ties)
    if (bct_to_tie(diagram, tie_to_bct(diagram, t)) != t) {
      ck.expect(false, "tie round trip");
      break;
    }
  ck.expect(tie_to_bct(diagram, example_ties_a()) == example_bct_a(), "first displayed pair");
  ck.expect(tie_to_bct(diagram, example_ties_b()) == example_bct_b(), "second displayed pair");

  std::mt19937 rng(101);
  BraneDiagram walk = diagram;
  const MarginPair expected = charges(diagram);
  for (int step = 0; step < 100; ++step) {
    std::vector<std::pair<int, HwDirection>> legal;
    for (int p = 0; p + 1 < walk.fivebrane_count(); ++p)
      for (HwDirection dir : {HwDirection::forward, HwDirection::backward}) {
        try {
          hw_step(walk, p, dir);
          legal.emplace_back(p, dir);
        } catch (const std::invalid_argument&) {
        }
      }
    if (legal.empty()) {
      ck.expect(false, "no legal step");
      break;
    }
    const auto [pos, dir] = legal[rng() % legal.size()];
    walk = hw_step(walk, pos, dir);
    if (charges(walk) != expected) {
      ck.expect(false, "charges changed under a step");
      break;
    }
  }

  ck.expect(format_diagram(separated_diagram(fig1_margins())) == "/2/3/5\\3\\2\\",
            "separated diamond margins");
  ck.expect(format_diagram(separated_diagram(mp({1, 1, 2}, {2, 2}))) == "/1/2/4\\2\\",
            "separated (1,1,2)/(2,2)");
  ck.expect(format_diagram(separated_diagram(fig2_margins())) == "/1/2/3/4\\2\\",
            "separated (1,1,1,1)/(2,2)");
  ck.expect(now_seconds() - t0 < 10.0, "time budget");
  return ck.ok;
}

// 11. resolutions
bool criterion_resolutions(Checker& ck) {
  const double t0 = now_seconds();

  const auto fiber = column_resolutions(fiber_host(), {1, 2, 1});
  const auto expected_fiber = fiber_expected();
  ck.expect(fiber.size() == 3, "fiber size");
  for (size_t i = 0; i < fiber.size() && ck.ok; ++i)
    ck.expect(fiber[i].matrix == expected_fiber[i], "displayed fiber member");

  auto as_set = [](const std::vector<BinaryMatrix>& v) {
    return std::set<BinaryMatrix>(v.begin(), v.end());
  };
  ck.expect(as_set(maximal_resolutions(resolution_m())) == as_set(resolution_m_maximal()),
            "maximal resolutions of the first displayed table");
  ck.expect(as_set(maximal_resolutions(resolution_n())) == as_set(resolution_n_maximal()),
            "maximal resolutions of the second displayed table");

  for_each_margin_pair(6, [&](const MarginPair& margins) {
    if (!ck.ok) return;
    const BctFamily family = enumerate_bcts(margins);
    if (family.size() == 0) return;

    // counts
    long long product = 1;
    for (int cj : margins.col_sums) {
      long long f = 1;
      for (int i = 2; i <= cj; ++i) f *= i;
      product *= f;
    }
    for (const BinaryMatrix& m : family.members) {
      if (static_cast<long long>(maximal_resolutions(m).size()) != product) {
        ck.expect(false, "maximal resolution count");
        return;
      }
      for (int k = 0; k < margins.total_cols(); ++k) {
        const int ck_sum = margins.col_sums[k];
        if (ck_sum < 2) continue;
        for (int left = 1; left < ck_sum; ++left) {
          long long binom = 1;
          for (int i = 1; i <= left; ++i) binom = binom * (ck_sum - left + i) / i;
          if (static_cast<long long>(column_resolutions(m, {k, left, ck_sum - left}).size()) !=
              binom) {
            ck.expect(false, "fiber size is not binomial");
            return;
          }
        }
      }
    }

    // compatibility criterion against the direct order, all pairs and splits
    const FiniteRelation rel = secondary_relation(family);
    for (int k = 0; k < margins.total_cols(); ++k) {
      const int ck_sum = margins.col_sums[k];
      if (ck_sum < 2) continue;
      for (int left = 1; left < ck_sum; ++left) {
        const ChargeResolution res{k, left, ck_sum - left};
        const ResolutionCompatibilityChecker checker(margins, res);
        std::vector<std::vector<int>> fibers(family.size());
        for (int a = 0; a < family.size(); ++a) fibers[a] = checker.fiber_indices(family[a]);
        for (int a = 0; a < family.size(); ++a)
          for (int b = 0; b < family.size(); ++b)
            if (checker.compatible(fibers[a], fibers[b]) != rel.leq(b, a)) {
              ck.expect(false, "compatibility disagrees with the direct order");
              return;
            }
      }
    }

    // two-column characterization
    if (margins.total_cols() == 2)
      for (int a = 0; a < family.size(); ++a)
        for (int b = 0; b < family.size(); ++b)
          if (two_column_leq(family[a], family[b]) != rel.leq(b, a)) {
            ck.expect(false, "two-column criterion disagrees");
            return;
          }
  });
  ck.expect(now_seconds() - t0 < 120.0, "time budget");
  return ck.ok;
}

// 12. interchange graphs are connected on every feasible family up to 7
bool criterion_connectivity(Checker& ck) {
  for_each_margin_pair(7, [&](const MarginPair& margins) {
    if (!ck.ok) return;
    const BctFamily family = enumerate_bcts(margins);
    ck.expect(gale_ryser_feasible(margins) == (family.size() > 0),
              "feasibility matches non-emptiness");
    if (family.size() == 0) return;
    ck.expect(is_connected(interchange_graph(family)), "interchange graph connected");
  });
  return ck.ok;
}

struct Criterion {
  int number;
  const char* label;
  std::function<bool(Checker&)> fn;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "family counts (5, 89, 297200) within budget", criterion_counts},
      {2, "diamond Hasse golden test", criterion_figure1},
      {3, "6x6 counterexample separates the orders", criterion_counterexample},
      {4, "geometric = secondary sweep to total 7", criterion_main_theorem_sweep},
      {5, "sigma covariance to total 6, 20 random permutations", criterion_sigma_covariance},
      {6, "coincidence families (k^n, 1^n, 2^n)", criterion_coincidence},
      {7, "cover criterion equals transitive reduction to total 7", criterion_cover_criterion},
      {8, "minimal block structure and covers as curves", criterion_curve_structure},
      {9, "curve/interchange divergence on (1,1,1,1)/(2,2)", criterion_figure2},
      {10, "brane calculus", criterion_brane},
      {11, "column and maximal resolutions", criterion_resolutions},
      {12, "interchange graph connectivity to total 7", criterion_connectivity},
  };

  int selected = 0;
  if (argc > 1) selected = std::atoi(argv[1]);

  bool all_ok = true;
  for (const Criterion& criterion : criteria) {
    if (selected != 0 && criterion.number != selected) continue;
    Checker ck;
    const double t0 = now_seconds();
    bool ok = false;
    try {
      ok = criterion.fn(ck);
    } catch (const std::exception& e) {
      ck.ok = false;
      ck.first_failure = std::string("exception: ") + e.what();
    }
    const double dt = now_seconds() - t0;
    std::printf("%s  %2d  %s  (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.number,
                criterion.label, dt, ok ? "" : "  -- ", ok ? "" : ck.first_failure.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
