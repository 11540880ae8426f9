// Serial reference vs OpenMP grid sweeps.

#include <benchmark/benchmark.h>

#include "birkhoff/sweep.hpp"

namespace {

using namespace birkhoff;

ClassifyGrid bench_grid() {
  ClassifyGrid grid;
  grid.phi_samples = 16;
  grid.a_samples = 16;
  grid.b_samples = 16;
  return grid;
}

void BM_ClassificationSweepSerial(benchmark::State& state) {
  const ClassifyGrid grid = bench_grid();
  for (auto _ : state) {
    auto rows = classification_sweep(grid, ExecMode::kSerial);
    benchmark::DoNotOptimize(rows);
  }
}

void BM_ClassificationSweepParallel(benchmark::State& state) {
  const ClassifyGrid grid = bench_grid();
  for (auto _ : state) {
    auto rows = classification_sweep(grid, ExecMode::kParallel);
    benchmark::DoNotOptimize(rows);
  }
}

void BM_BoundarySweepSerial(benchmark::State& state) {
  for (auto _ : state) {
    auto values = boundary_sweep(360, ExecMode::kSerial);
    benchmark::DoNotOptimize(values);
  }
}

void BM_BoundarySweepParallel(benchmark::State& state) {
  for (auto _ : state) {
    auto values = boundary_sweep(360, ExecMode::kParallel);
    benchmark::DoNotOptimize(values);
  }
}

BENCHMARK(BM_ClassificationSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassificationSweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundarySweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundarySweepParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
