#include <benchmark/benchmark.h>

#include <vector>

#include "isoforest/primes.hpp"
#include "isoforest/product_tree.hpp"
#include "isoforest/treegen.hpp"

using namespace isoforest;

namespace {

std::vector<BigNat> random_prime_list(std::size_t len) {
  const auto primes = naive_sieve(1000000);
  Rng rng(len);
  std::vector<BigNat> xs;
  xs.reserve(len);
  for (std::size_t i = 0; i < len; ++i) xs.emplace_back(primes[rng.below(primes.size())]);
  return xs;
}

}  // namespace

static void BM_ProductTree(benchmark::State& state) {
  const auto xs = random_prime_list(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(product(std::span<const BigNat>(xs)));
  }
}
BENCHMARK(BM_ProductTree)->Arg(100)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_ProductFold(benchmark::State& state) {
  const auto xs = random_prime_list(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    BigNat acc = 1;
    for (const auto& x : xs) acc *= x;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ProductFold)->Arg(100)->Arg(1000)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
