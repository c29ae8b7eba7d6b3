#include <benchmark/benchmark.h>

#include "coarsekit/coarsekit.hpp"

namespace ck = coarsekit;

// Interval witness on a line of 2n+1 points, r just below the gap.
static void BM_FadWitnessLine(benchmark::State& state) {
  auto n = state.range(0);
  auto line = ck::MetricSpace::integer_line(-n, n);
  auto gen = ck::interval_cover_generator(line, 8);
  std::vector<ck::SubsetFamily> fams(gen.begin(), gen.end());
  for (auto _ : state) {
    benchmark::DoNotOptimize(ck::verify_fad_witness(line, fams, 8));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FadWitnessLine)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_FadWitnessPlane(benchmark::State& state) {
  auto n = state.range(0);
  auto box = ck::MetricSpace::integer_grid_box(2, -n, n);
  auto gen = ck::interval_cover_generator(box, 8);
  std::vector<ck::SubsetFamily> fams(gen.begin(), gen.end());
  for (auto _ : state) {
    benchmark::DoNotOptimize(ck::verify_fad_witness(box, fams, 4));
  }
}
BENCHMARK(BM_FadWitnessPlane)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
