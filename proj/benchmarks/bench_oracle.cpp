#include <benchmark/benchmark.h>

#include "lmec/oracle.hpp"

using namespace lmec;

static void BM_ConflictGraph(benchmark::State& state) {
  CodeParams p(static_cast<int>(state.range(0)), 1,
               static_cast<int>(state.range(1)));
  for (auto _ : state) {
    oracle::ConflictGraph g = oracle::build_conflict_graph(p, Mode::Uec);
    benchmark::DoNotOptimize(g.bits.data());
  }
}
BENCHMARK(BM_ConflictGraph)->Args({4, 3})->Args({5, 3})->Args({6, 3});

static void BM_MaxCodeAec(benchmark::State& state) {
  CodeParams p(static_cast<int>(state.range(0)), 1,
               static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto [size, witness] = oracle::max_code_exact(p, Mode::Aec);
    benchmark::DoNotOptimize(size);
  }
}
BENCHMARK(BM_MaxCodeAec)->Args({3, 3})->Args({4, 3})->Args({5, 2});

static void BM_MaxCodeUec(benchmark::State& state) {
  CodeParams p(static_cast<int>(state.range(0)), 1,
               static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto [size, witness] = oracle::max_code_exact(p, Mode::Uec);
    benchmark::DoNotOptimize(size);
  }
}
BENCHMARK(BM_MaxCodeUec)->Args({3, 3})->Args({4, 3})->Args({5, 2});

static void BM_BoundReport(benchmark::State& state) {
  CodeParams p(4, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    oracle::BoundReport r = oracle::bound_report(p);
    benchmark::DoNotOptimize(r.checks.data());
  }
}
BENCHMARK(BM_BoundReport)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
