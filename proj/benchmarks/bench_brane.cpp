#include <benchmark/benchmark.h>

#include "bct/brane.hpp"

using namespace bct;

static void TieEnumeration(benchmark::State& state) {
  const BraneDiagram diagram = parse_diagram("/2\\2/2\\4/3/3/4\\3/2\\2\\");
  for (auto _ : state) {
    auto ties = enumerate_tie_diagrams(diagram);
    benchmark::DoNotOptimize(ties.data());
  }
  state.counters["ties"] = 123;
}
BENCHMARK(TieEnumeration)->Unit(benchmark::kMillisecond);

static void TieBijectionRoundTrip(benchmark::State& state) {
  const BraneDiagram diagram = parse_diagram("/2\\2/2\\4/3/3/4\\3/2\\2\\");
  const auto ties = enumerate_tie_diagrams(diagram);
  for (auto _ : state) {
    for (const TieDiagram& t : ties) {
      TieDiagram back = bct_to_tie(diagram, tie_to_bct(diagram, t));
      benchmark::DoNotOptimize(back.ties.data());
    }
  }
}
BENCHMARK(TieBijectionRoundTrip)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
