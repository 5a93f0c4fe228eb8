#include <benchmark/benchmark.h>

#include "pgmd/graph.hpp"
#include "pgmd/group.hpp"
#include "pgmd/resolve.hpp"
#include "pgmd/twins.hpp"

using namespace pgmd;

static void BM_PowerGraphConstruction(benchmark::State& state) {
  const FiniteGroup g = make_dihedral(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SimpleGraph pg = power_graph(g);
    benchmark::DoNotOptimize(pg);
  }
}
BENCHMARK(BM_PowerGraphConstruction)->Arg(12)->Arg(24)->Arg(48);

static void BM_AllPairsDistances(benchmark::State& state) {
  const SimpleGraph pg = power_graph(make_cyclic(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    DistanceMatrix d = all_pairs_distances(pg);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_AllPairsDistances)->Arg(32)->Arg(64)->Arg(128);

static void BM_TwinPartition(benchmark::State& state) {
  const SimpleGraph pg = power_graph(make_cyclic(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    TwinPartition part = twin_partition(pg);
    benchmark::DoNotOptimize(part);
  }
}
BENCHMARK(BM_TwinPartition)->Arg(32)->Arg(64)->Arg(128);

static void BM_MetricDimensionOracle(benchmark::State& state) {
  const SimpleGraph pg = power_graph(make_cyclic(static_cast<int>(state.range(0))));
  const DistanceMatrix d = all_pairs_distances(pg);
  for (auto _ : state) {
    MdReport r = metric_dimension_oracle(pg, d);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MetricDimensionOracle)->Arg(12)->Arg(18)->Arg(20);

static void BM_MetricDimensionOracleDihedral(benchmark::State& state) {
  const SimpleGraph pg = power_graph(make_dihedral(static_cast<int>(state.range(0))));
  const DistanceMatrix d = all_pairs_distances(pg);
  for (auto _ : state) {
    MdReport r = metric_dimension_oracle(pg, d);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MetricDimensionOracleDihedral)->Arg(6)->Arg(8)->Arg(10);

static void BM_EnumerateMinimalSets(benchmark::State& state) {
  const SimpleGraph pg = power_graph(make_cyclic(static_cast<int>(state.range(0))));
  const DistanceMatrix d = all_pairs_distances(pg);
  for (auto _ : state) {
    auto sets = enumerate_minimal_resolving_sets(pg, d);
    benchmark::DoNotOptimize(sets);
  }
}
BENCHMARK(BM_EnumerateMinimalSets)->Arg(6)->Arg(12)->Arg(15);

static void BM_ExchangeProperty(benchmark::State& state) {
  const SimpleGraph pg = power_graph(make_cyclic(static_cast<int>(state.range(0))));
  const DistanceMatrix d = all_pairs_distances(pg);
  for (auto _ : state) {
    ExchangeReport r = exchange_property(pg, d);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ExchangeProperty)->Arg(6)->Arg(12)->Arg(15);

BENCHMARK_MAIN();
