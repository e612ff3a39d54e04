#include <benchmark/benchmark.h>

#include "bct/curves.hpp"
#include "bct/enumerate.hpp"
#include "bct/orders.hpp"

using namespace bct;

namespace {

const BctFamily& permutation_family() {
  static const BctFamily family =
      enumerate_bcts({std::vector<int>(6, 1), std::vector<int>(6, 1)});  // 720 members
  return family;
}

const BctFamily& regular_family() {
  static const BctFamily family =
      enumerate_bcts({std::vector<int>(5, 2), std::vector<int>(5, 2)});  // 2040 members
  return family;
}

}  // namespace

static void SecondaryClosure(benchmark::State& state) {
  const BctFamily& family = state.range(0) == 0 ? permutation_family() : regular_family();
  for (auto _ : state) {
    FiniteRelation rel = secondary_relation(family);
    benchmark::DoNotOptimize(rel.reach.row(0).data());
  }
}
BENCHMARK(SecondaryClosure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BruhatPairwise(benchmark::State& state) {
  const BctFamily& family = state.range(0) == 0 ? permutation_family() : regular_family();
  for (auto _ : state) {
    FiniteRelation rel = bruhat_relation(family);
    benchmark::DoNotOptimize(rel.reach.row(0).data());
  }
}
BENCHMARK(BruhatPairwise)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void HasseReduction(benchmark::State& state) {
  const BctFamily& family = permutation_family();
  const FiniteRelation rel = secondary_relation(family);
  for (auto _ : state) {
    HasseDiagram diagram = hasse(rel);
    benchmark::DoNotOptimize(diagram.cover_edges.data());
  }
}
BENCHMARK(HasseReduction)->Unit(benchmark::kMillisecond);

static void CurveEnumeration(benchmark::State& state) {
  const BctFamily& family = permutation_family();
  const CocharacterSpec id = CocharacterSpec::identity(6);
  for (auto _ : state) {
    CurveDigraph graph = curve_digraph(family, id);
    benchmark::DoNotOptimize(graph.arcs.data());
  }
}
BENCHMARK(CurveEnumeration)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
