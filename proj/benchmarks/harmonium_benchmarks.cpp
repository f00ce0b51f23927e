#include <benchmark/benchmark.h>

#include "harmonium/enumerate.hpp"
#include "harmonium/fit.hpp"
#include "harmonium/regions.hpp"
#include "harmonium/starfast.hpp"

namespace {

using namespace harmonium;

void BM_CountNowhereHarmonic(benchmark::State& state) {
  const auto g = family(Family::cycle, 5);
  const auto m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count_nowhere_harmonic(g, m));
  state.SetComplexityN(m);
}
BENCHMARK(BM_CountNowhereHarmonic)->RangeMultiplier(2)->Range(8, 32)->Complexity();

void BM_ReciprocityRhs(benchmark::State& state) {
  const auto g = family(Family::complete, 4);
  for (auto _ : state) benchmark::DoNotOptimize(reciprocity_rhs(g, state.range(0)));
}
BENCHMARK(BM_ReciprocityRhs)->Arg(8)->Arg(16)->Arg(32);

void BM_CountStar(benchmark::State& state) {
  const auto m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count_star(6, m));
  state.SetComplexityN(m);
}
BENCHMARK(BM_CountStar)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_CountStarBigInteger(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_star(static_cast<int>(state.range(0)), 60));
}
BENCHMARK(BM_CountStarBigInteger)->Arg(20)->Arg(40);

void BM_ReduceStarSix(benchmark::State& state) {
  const auto report = fit_quasipolynomial(star_oracle(6), 6, default_period_candidates(6));
  const auto unreduced = unreduced_generating_function(report);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_gf(unreduced));
}
BENCHMARK(BM_ReduceStarSix)->Unit(benchmark::kMillisecond);

void BM_RegionPoints(benchmark::State& state) {
  const auto g = family(Family::star, 5);
  const auto sys = region_system(g, star_region_orientation(5, 2));
  for (auto _ : state) benchmark::DoNotOptimize(count_region_points(sys, state.range(0)));
}
BENCHMARK(BM_RegionPoints)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
