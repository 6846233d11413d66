#include <benchmark/benchmark.h>

#include "lmec/aec.hpp"
#include "lmec/uec.hpp"
#include "lmec/vt.hpp"

using namespace lmec;

static void BM_EnumeratePowerCode(benchmark::State& state) {
  CodeParams p(4, 1, static_cast<int>(state.range(0)));
  vt::PowerCodeSpec spec(p, 0);
  vt::LinearCode code = spec.to_linear();
  for (auto _ : state) {
    Codebook c = vt::enumerate(code);
    benchmark::DoNotOptimize(c.words.data());
  }
}
BENCHMARK(BM_EnumeratePowerCode)->Arg(6)->Arg(8)->Arg(10);

static void BM_AecWalk(benchmark::State& state) {
  CodeParams p(7, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long long count = 0;
    aec::for_each_codeword(p, [&count](const Word&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_AecWalk)->Arg(6)->Arg(8)->Arg(10);

static void BM_ConstantSum(benchmark::State& state) {
  CodeParams p(5, 1, static_cast<int>(state.range(0)));
  long long j = uec::jstar(p);
  for (auto _ : state) {
    Codebook c = uec::build_constant_sum(p, j);
    benchmark::DoNotOptimize(c.words.data());
  }
}
BENCHMARK(BM_ConstantSum)->Arg(6)->Arg(8)->Arg(10);

static void BM_TailCode(benchmark::State& state) {
  CodeParams p(5, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Codebook c = uec::build_tail_code(p);
    benchmark::DoNotOptimize(c.words.data());
  }
}
BENCHMARK(BM_TailCode)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
