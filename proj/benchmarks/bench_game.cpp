#include <benchmark/benchmark.h>

#include "coarsekit/coarsekit.hpp"

namespace ck = coarsekit;

static void BM_IntervalGame(benchmark::State& state) {
  auto line = ck::MetricSpace::integer_line(-state.range(0), state.range(0));
  for (auto _ : state) {
    auto s = ck::interval_strategy();
    benchmark::DoNotOptimize(ck::play_fdc(line, *s, ck::Adversary::constant(7), 4));
  }
}
BENCHMARK(BM_IntervalGame)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_SlabGame(benchmark::State& state) {
  auto box = ck::MetricSpace::integer_grid_box(2, -state.range(0), state.range(0));
  for (auto _ : state) {
    auto s = ck::slab_strategy(2);
    benchmark::DoNotOptimize(ck::play_fdc(box, *s, ck::Adversary::sequence({3, 11}), 4));
  }
}
BENCHMARK(BM_SlabGame)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_LiftedGame(benchmark::State& state) {
  auto N = state.range(0);
  auto action = ck::lattice_projection_action(2, N, 2 * N);
  auto space = ck::cayley_space(action.group(), N);
  for (auto _ : state) {
    auto s = ck::lifted_strategy(action, space, ck::interval_strategy(),
                                 ck::strip_interval_factory(1));
    benchmark::DoNotOptimize(ck::play_fdc(space, *s, ck::Adversary::sequence({3, 11}), 4));
  }
}
BENCHMARK(BM_LiftedGame)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
