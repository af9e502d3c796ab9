#include <benchmark/benchmark.h>

#include "cox/sweep.hpp"

namespace {

const std::vector<int> kPs{1, 2, 3};

void BM_MethodSweepSerial(benchmark::State& state) {
  const auto types = cox::catalog(12, 30);
  for (auto _ : state) benchmark::DoNotOptimize(cox::method_sweep_serial(types, 12, kPs));
}

void BM_MethodSweepParallel(benchmark::State& state) {
  const auto types = cox::catalog(12, 30);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cox::method_sweep_parallel(types, 12, kPs, jobs));
}

void BM_VerifySerial(benchmark::State& state) {
  const auto tasks = cox::build_tasks(cox::RunOptions{});
  for (auto _ : state) benchmark::DoNotOptimize(cox::run_tasks_serial(tasks));
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto tasks = cox::build_tasks(cox::RunOptions{});
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cox::run_tasks_parallel(tasks, jobs));
}

}  // namespace

BENCHMARK(BM_MethodSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MethodSweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
