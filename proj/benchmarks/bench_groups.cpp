#include <benchmark/benchmark.h>

#include "coarsekit/coarsekit.hpp"

namespace ck = coarsekit;

static void BM_LamplighterBall(benchmark::State& state) {
  auto G = ck::make_lamplighter();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ck::ball(*G, state.range(0)));
  }
}
BENCHMARK(BM_LamplighterBall)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_FreeGroupBall(benchmark::State& state) {
  auto F = ck::make_free_group(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ck::ball(*F, state.range(0)));
  }
}
BENCHMARK(BM_FreeGroupBall)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
