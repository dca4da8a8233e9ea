#include <benchmark/benchmark.h>

#include <polytri/asymptotics.hpp>
#include <polytri/counting.hpp>
#include <polytri/gf_check.hpp>

using namespace polytri;

static void BM_BalancedSum2Table(benchmark::State& state) {
  for (auto _ : state) {
    Count acc = 0;
    for (int k = 2; k <= 7; ++k)
      for (int r = 1; r <= 6; ++r) acc += balanced_count({k, r});
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_BalancedSum2Table);

static void BM_BalancedSum2Large(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Count v = balanced_count_sum2({k, 2});
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_BalancedSum2Large)->Arg(100)->Arg(300);

static void BM_InclusionExclusion(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Count v = balanced_count_ie({k, 4});
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_InclusionExclusion)->Arg(6)->Arg(10);

static void BM_VanHoeijSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RatSeries s = van_hoeij_series(order);
    benchmark::DoNotOptimize(s.coeff(order));
  }
}
BENCHMARK(BM_VanHoeijSeries)->Arg(15)->Arg(30);

static void BM_QuadratureBalanced(benchmark::State& state) {
  for (auto _ : state) {
    double v = quadrature_check({3, 2});
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_QuadratureBalanced);
