#include <benchmark/benchmark.h>

#include "isoforest/primes.hpp"

using namespace isoforest;

static void BM_SegmentedSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  const bool wheel = state.range(1) != 0;
  for (auto _ : state) {
    SieveState st = initial_state(wheel);
    while (st.n_sieve < limit) extend_sieve(st);
    benchmark::DoNotOptimize(st.primes.size());
  }
}
BENCHMARK(BM_SegmentedSieve)
    ->Args({100000, 1})
    ->Args({100000, 0})
    ->Args({1000000, 1})
    ->Args({1000000, 0});

static void BM_NaiveSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_sieve(limit).size());
  }
}
BENCHMARK(BM_NaiveSieve)->Arg(100000)->Arg(1000000);

static void BM_NextPrimeScan(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SieveState st = initial_state();
    std::uint64_t p = 2;
    for (std::size_t i = 0; i < count; ++i) p = next_prime(st, p);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_NextPrimeScan)->Arg(1000)->Arg(100000);

BENCHMARK_MAIN();
