#include <benchmark/benchmark.h>

#include "support/setups.hpp"

namespace ck = coarsekit;

static void BM_FadExtension(benchmark::State& state) {
  auto input = setup::lattice_fad(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ck::build_fad_cover(input, 2));
  }
}
BENCHMARK(BM_FadExtension)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_ApcExtension(benchmark::State& state) {
  auto input = setup::lattice_apc(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ck::build_apc_cover(input, setup::apc_radii()));
  }
}
BENCHMARK(BM_ApcExtension)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
