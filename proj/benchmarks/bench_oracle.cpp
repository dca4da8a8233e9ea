#include <benchmark/benchmark.h>

#include <polytri/oracle.hpp>

using namespace polytri;

static void BM_CountLegalBalanced(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  StringLayout lay = StringLayout::balanced({k, r});
  for (auto _ : state) {
    Count v = count_legal(lay);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_CountLegalBalanced)->Args({3, 4})->Args({4, 3})->Args({7, 2});

static void BM_CountLegalDP(benchmark::State& state) {
  StringLayout lay = StringLayout::balanced({4, 4});
  for (auto _ : state) {
    Count v = count_legal_dp(lay);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_CountLegalDP);

static void BM_BijectionRoundTrip(benchmark::State& state) {
  TriangleParams t{2, 2, 2};
  for (auto _ : state) {
    long total = 0;
    enumerate_legal(StringLayout::triangle(t), [&](const Triangulation& tri) {
      FundamentalSet f = fundamental_set_of(tri, t);
      total += triangulation_of(f, t).diagonals.size();
    });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_BijectionRoundTrip);
