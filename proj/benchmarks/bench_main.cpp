#include <benchmark/benchmark.h>

#include <complex>

#include "polylog/cocycle.hpp"
#include "polylog/koszul.hpp"
#include "polylog/specfun.hpp"

namespace {

using polylog::cplx;

void BM_LiSeries(benchmark::State& state) {
  const cplx t(0.31, 0.27);
  for (auto _ : state) benchmark::DoNotOptimize(polylog::li(static_cast<int>(state.range(0)), t));
}
BENCHMARK(BM_LiSeries)->Arg(2)->Arg(5)->Arg(9);

void BM_LiLogExpansion(benchmark::State& state) {
  const cplx t(0.85, 0.75);
  for (auto _ : state) benchmark::DoNotOptimize(polylog::li(static_cast<int>(state.range(0)), t));
}
BENCHMARK(BM_LiLogExpansion)->Arg(2)->Arg(5)->Arg(9);

void BM_LiInversion(benchmark::State& state) {
  const cplx t(-3.4, 2.1);
  for (auto _ : state) benchmark::DoNotOptimize(polylog::li(static_cast<int>(state.range(0)), t));
}
BENCHMARK(BM_LiInversion)->Arg(2)->Arg(5)->Arg(9);

void BM_Dbwr(benchmark::State& state) {
  const cplx t(0.42, 0.63);
  for (auto _ : state)
    benchmark::DoNotOptimize(polylog::d_bwr(static_cast<int>(state.range(0)), t));
}
BENCHMARK(BM_Dbwr)->Arg(2)->Arg(6)->Arg(10);

void BM_SliceCohomology(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const auto s = polylog::build_slice(g, N, polylog::MultiIndex::zero(g));
    benchmark::DoNotOptimize(polylog::slice_cohomology_dims(s));
  }
}
BENCHMARK(BM_SliceCohomology)->Args({2, 4})->Args({3, 4})->Args({4, 4})->Args({4, 6})
    ->Unit(benchmark::kMillisecond);

void BM_CocyclePoint(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const auto pts = polylog::sample_points(g, 1, 42);
  auto section = [&](const polylog::PointSample& q) { return polylog::alpha_at(g, 3, q); };
  for (auto _ : state)
    benchmark::DoNotOptimize(polylog::nabla_numeric(section, pts[0], 5e-5));
}
BENCHMARK(BM_CocyclePoint)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
