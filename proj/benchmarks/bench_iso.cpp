#include <benchmark/benchmark.h>

#include <utility>

#include "isoforest/iso.hpp"
#include "isoforest/treegen.hpp"

using namespace isoforest;

namespace {

std::pair<Tree, Tree> make_pair(std::size_t n, bool iso) {
  Rng rng(n * 2 + iso);
  Tree t1 = random_recursive_tree(n, rng);
  Tree t2 = iso ? isomorphic_copy(t1, rng) : random_recursive_tree(n, rng);
  return {std::move(t1), std::move(t2)};
}

template <bool (*Decider)(const Tree&, const Tree&, DeciderStats*)>
void run(benchmark::State& state) {
  const auto [t1, t2] = make_pair(static_cast<std::size_t>(state.range(0)),
                                  state.range(1) != 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Decider(t1, t2, nullptr));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          state.range(0));
}

void BM_PrimesAhu(benchmark::State& state) { run<primes_ahu>(state); }
void BM_IdealAhu(benchmark::State& state) { run<ideal_ahu>(state); }
void BM_OriginalAhu(benchmark::State& state) { run<original_ahu>(state); }

void configure(benchmark::internal::Benchmark* b) {
  for (const std::int64_t n : {1000, 10000, 100000, 1000000})
    for (const std::int64_t iso : {1, 0}) b->Args({n, iso});
  b->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_PrimesAhu)->Apply(configure);
BENCHMARK(BM_IdealAhu)->Apply(configure);
BENCHMARK(BM_OriginalAhu)->Apply(configure);

}  // namespace

BENCHMARK_MAIN();
