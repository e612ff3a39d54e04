#include <benchmark/benchmark.h>

#include "bct/enumerate.hpp"
#include "bct/sweep.hpp"

using namespace bct;

static void EnumerateDiamond(benchmark::State& state) {
  const MarginPair margins{{2, 1, 2}, {2, 1, 2}};
  for (auto _ : state) {
    BctFamily family = enumerate_bcts(margins);
    benchmark::DoNotOptimize(family.members.data());
  }
}
BENCHMARK(EnumerateDiamond);

static void EnumerateCounterexampleFamily(benchmark::State& state) {
  const MarginPair margins{{1, 4, 5, 2, 1, 3}, {3, 1, 2, 5, 4, 1}};
  for (auto _ : state) {
    BctFamily family = enumerate_bcts(margins);
    benchmark::DoNotOptimize(family.members.data());
  }
}
BENCHMARK(EnumerateCounterexampleFamily);

static void EnumerateRegular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const MarginPair margins{std::vector<int>(n, k), std::vector<int>(n, k)};
  int64_t size = 0;
  for (auto _ : state) {
    BctFamily family = enumerate_bcts(margins);
    size = family.size();
    benchmark::DoNotOptimize(family.members.data());
  }
  state.counters["members"] = static_cast<double>(size);
}
BENCHMARK(EnumerateRegular)->Args({5, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

static void GaleRyserSweep(benchmark::State& state) {
  // all composition pairs with totals up to 7
  for (auto _ : state) {
    int feasible = 0;
    for (int total = 1; total <= 7; ++total)
      for_each_composition(total, [&](const std::vector<int>& r) {
        for_each_composition(total, [&](const std::vector<int>& c) {
          if (gale_ryser_feasible({r, c})) ++feasible;
        });
      });
    benchmark::DoNotOptimize(feasible);
  }
}
BENCHMARK(GaleRyserSweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
