#include <benchmark/benchmark.h>

#include "ehrlab/constructions.hpp"
#include "ehrlab/count.hpp"
#include "ehrlab/ehrhart.hpp"

using namespace ehrlab;

static void BM_CountPentagon(benchmark::State& state) {
  const VPolytope p = pentagon(3);
  const Int k(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_lattice_points(p, k));
  }
}
BENCHMARK(BM_CountPentagon)->Arg(8)->Arg(32)->Arg(128);

static void BM_CountQi(benchmark::State& state) {
  const PolytopalBall q = build_qi(CyclicConfig::standard(3), 3, 1, 2);
  const Int k(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_lattice_points(q, k));
  }
}
BENCHMARK(BM_CountQi)->Arg(4)->Arg(8)->Arg(16);

static void BM_CountQiParallel(benchmark::State& state) {
  const PolytopalBall q = build_qi(CyclicConfig::standard(3), 3, 1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_lattice_points(q, 16, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CountQiParallel)->Arg(1)->Arg(2)->Arg(4);

static void BM_EhrhartPyramidSegment(benchmark::State& state) {
  const VPolytope p = segment(3).pyr_power(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ehrhart(p));
  }
}
BENCHMARK(BM_EhrhartPyramidSegment);

BENCHMARK_MAIN();
