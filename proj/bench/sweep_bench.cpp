// Serial reference vs OpenMP sweep kernels on the exhaustive enumeration.

#include <benchmark/benchmark.h>

#include "kucheck/explorer.hpp"

namespace {

kuc::EnumSpec serial_spec(int n, int workers) {
  kuc::EnumSpec spec;
  spec.n = n;
  spec.serial = true;
  spec.worker_count = workers;
  return spec;
}

void BM_sweep_serial(benchmark::State& state) {
  auto spec = serial_spec(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    auto report = kuc::invariant_sweep_serial(spec, {});
    benchmark::DoNotOptimize(report.models_scanned);
  }
}

void BM_sweep_parallel(benchmark::State& state) {
  auto spec = serial_spec(static_cast<int>(state.range(0)),
                          static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto report = kuc::invariant_sweep(spec, {});
    benchmark::DoNotOptimize(report.models_scanned);
  }
}

void BM_count_serial(benchmark::State& state) {
  auto spec = serial_spec(static_cast<int>(state.range(0)), 1);
  kuc::SearchTarget target =
      kuc::PropertyTarget{kuc::PropertyId::NontrivialUnawareness};
  for (auto _ : state) {
    auto result = kuc::search_serial(spec, target, kuc::SearchMode::Count, {});
    benchmark::DoNotOptimize(result.match_count);
  }
}

void BM_count_parallel(benchmark::State& state) {
  auto spec = serial_spec(static_cast<int>(state.range(0)),
                          static_cast<int>(state.range(1)));
  kuc::SearchTarget target =
      kuc::PropertyTarget{kuc::PropertyId::NontrivialUnawareness};
  for (auto _ : state) {
    auto result = kuc::search(spec, target, kuc::SearchMode::Count, {});
    benchmark::DoNotOptimize(result.match_count);
  }
}

}  // namespace

BENCHMARK(BM_sweep_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)
    ->Args({4, 2})
    ->Args({4, 4})
    ->Args({4, 8})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_serial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_parallel)->Args({4, 4})->Args({4, 8})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
