#include <benchmark/benchmark.h>

#include "lmec/counting.hpp"
#include "lmec/vt.hpp"

using namespace lmec;

static void BM_UniformSumTable(benchmark::State& state) {
  int radix = static_cast<int>(state.range(0));
  int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    CountTable t = uniform_sum_table(radix, n);
    benchmark::DoNotOptimize(t.counts.data());
  }
}
BENCHMARK(BM_UniformSumTable)->Args({4, 16})->Args({8, 32})->Args({16, 64});

static void BM_ValueDistribution(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<long long> coeffs;
  for (int i = 0; i < n; ++i) coeffs.push_back(i % 2 ? -(i + 1) : i + 1);
  for (auto _ : state) {
    CountTable t = value_distribution(7, coeffs);
    benchmark::DoNotOptimize(t.counts.data());
  }
}
BENCHMARK(BM_ValueDistribution)->Arg(8)->Arg(12)->Arg(16);

static void BM_GammaTable(benchmark::State& state) {
  CodeParams p(5, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CountTable t = vt::gamma_table(p);
    benchmark::DoNotOptimize(t.counts.data());
  }
}
BENCHMARK(BM_GammaTable)->Arg(6)->Arg(10)->Arg(14);

static void BM_GammaRecursion(benchmark::State& state) {
  CodeParams p(7, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    mpz_class g = vt::gamma(p, 0);
    benchmark::DoNotOptimize(g.get_mpz_t());
  }
}
BENCHMARK(BM_GammaRecursion)->Arg(12)->Arg(20)->Arg(28);

BENCHMARK_MAIN();
