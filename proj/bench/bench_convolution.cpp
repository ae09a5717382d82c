#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "gfc/convolution.hpp"
#include "gfc/kernels.hpp"

namespace {

std::vector<double> samples(const gfc::Grid& grid) {
  std::vector<double> g;
  for (double t : grid.nodes()) g.push_back(std::exp(t) * std::cos(2.0 * t));
  return g;
}

void BM_ConvolveSamplesReference(benchmark::State& state) {
  const gfc::Grid grid(1.0, static_cast<int>(state.range(0)), 2.0);
  const auto k = gfc::make_bessel_pair(0.5, 2).k();
  const auto g = samples(grid);
  for (auto _ : state) benchmark::DoNotOptimize(gfc::reference::convolve_samples(k, g, grid));
}

void BM_ConvolveSamplesParallel(benchmark::State& state) {
  const gfc::Grid grid(1.0, static_cast<int>(state.range(0)), 2.0);
  const auto k = gfc::make_bessel_pair(0.5, 2).k();
  const auto g = samples(grid);
  for (auto _ : state) benchmark::DoNotOptimize(gfc::convolve_samples(k, g, grid));
}

void BM_ConvolveKernelsReference(benchmark::State& state) {
  const gfc::Grid grid(1.0, static_cast<int>(state.range(0)), 2.0);
  const auto pair = gfc::make_bessel_pair(0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gfc::reference::convolve_kernels(pair.kappa(), pair.k(), grid));
}

void BM_ConvolveKernelsParallel(benchmark::State& state) {
  const gfc::Grid grid(1.0, static_cast<int>(state.range(0)), 2.0);
  const auto pair = gfc::make_bessel_pair(0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gfc::convolve_kernels(pair.kappa(), pair.k(), grid));
}

BENCHMARK(BM_ConvolveSamplesReference)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvolveSamplesParallel)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvolveKernelsReference)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvolveKernelsParallel)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
