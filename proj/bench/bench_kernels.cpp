// Serial vs OpenMP kernels on the two hot loops: triangle rows and the
// boxed divisibility scan. Run with OMP_NUM_THREADS to vary the pool.

#include "binomid/kernels.hpp"
#include "binomid/sequence.hpp"

#include <benchmark/benchmark.h>

using namespace binomid;

namespace {

std::vector<BigInt> fib_factorials(std::int64_t n) {
  return kernels::factorials(fibonacci().prefix(n));
}

// 2^(b_n) with b_n = 1 except a late dip, so the scan runs nearly to the
// end before finding its violation.
std::vector<BigInt> late_failure_factorials(std::int64_t n) {
  std::vector<BigInt> terms(static_cast<std::size_t>(n), BigInt(2));
  terms[0] = 1;
  terms[static_cast<std::size_t>(n - 2)] = 1;
  return kernels::factorials(terms);
}

void BM_triangle_serial(benchmark::State &state) {
  const auto fact = fib_factorials(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::triangle_rows_serial(fact, state.range(0)));
}

void BM_triangle_parallel(benchmark::State &state) {
  const auto fact = fib_factorials(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::triangle_rows_parallel(fact, state.range(0)));
  state.counters["threads"] = kernels::worker_count();
}

void BM_boxed_serial(benchmark::State &state) {
  const auto fact = fib_factorials(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::boxed_scan_serial(fact, state.range(0)));
}

void BM_boxed_parallel(benchmark::State &state) {
  const auto fact = fib_factorials(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::boxed_scan_parallel(fact, state.range(0)));
  state.counters["threads"] = kernels::worker_count();
}

void BM_boxed_late_failure_serial(benchmark::State &state) {
  const auto fact = late_failure_factorials(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::boxed_scan_serial(fact, state.range(0)));
}

void BM_boxed_late_failure_parallel(benchmark::State &state) {
  const auto fact = late_failure_factorials(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::boxed_scan_parallel(fact, state.range(0)));
}

} // namespace

BENCHMARK(BM_triangle_serial)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_triangle_parallel)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_boxed_serial)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_boxed_parallel)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_boxed_late_failure_serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_boxed_late_failure_parallel)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
