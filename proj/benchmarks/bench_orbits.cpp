#include <benchmark/benchmark.h>

#include "sloane/orbits.hpp"
#include "sloane/verify.hpp"

using namespace sloane;

static void BM_StepLarge(benchmark::State& state) {
  const Natural n = Natural::pow(2, static_cast<std::uint64_t>(state.range(0)));
  const MapSpec m = MapSpec::shifted(1, Base(3));
  for (auto _ : state) benchmark::DoNotOptimize(step(m, n));
}
BENCHMARK(BM_StepLarge)->RangeMultiplier(8)->Range(1 << 8, 1 << 17)->Unit(benchmark::kMicrosecond);

static void BM_PersistenceTable(benchmark::State& state) {
  const MapSpec m = state.range(1) ? MapSpec::erdos_star(Base(10)) : MapSpec::shifted(1, Base(10));
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(persistence_table(m, 1, n_max, {}, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PersistenceTable)->Args({10000, 0})->Args({10000, 1})->Unit(benchmark::kMillisecond);

static void BM_ChainTail(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(iterate(MapSpec::shifted(1, Base(3)), Natural::pow(2, 168980)));
}
BENCHMARK(BM_ChainTail)->Unit(benchmark::kMillisecond);

// One orbit of a map in the diverging regime, run until the size heuristic
// fires.
static void BM_DivergentOrbit(benchmark::State& state) {
  const MapSpec m = MapSpec::shifted(4, Base(5));
  for (auto _ : state) benchmark::DoNotOptimize(iterate(m, Natural(123457)));
}
BENCHMARK(BM_DivergentOrbit)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
