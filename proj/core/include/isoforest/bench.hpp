#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isoforest/tree.hpp"

namespace isoforest {

enum class BenchAlgo { primes, original };
enum class BenchCase { iso, noniso };

const char* to_string(BenchAlgo a) noexcept;
const char* to_string(BenchCase c) noexcept;

/// One timed decider call. The clock covers only the call itself; tree
/// generation happens before the timed region.
struct BenchRecord {
  BenchAlgo algorithm = BenchAlgo::primes;
  std::size_t n = 0;
  BenchCase bench_case = BenchCase::iso;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double seconds = 0.0;
  bool verdict = false;
};

struct BenchConfig {
  std::vector<std::size_t> sizes{10, 100, 1000, 10000, 100000, 1000000};

  /// Explicit trial count; when unset, 100 per cell and 20 for n > 10^5.
  std::optional<std::size_t> trials;

  std::uint64_t base_seed = 1;
  std::vector<BenchAlgo> algos{BenchAlgo::primes, BenchAlgo::original};
  std::vector<BenchCase> cases{BenchCase::iso, BenchCase::noniso};

  /// Run each decider once untimed before measuring.
  bool warmup = false;

  /// Worker threads; the ISOFOREST_THREADS environment variable caps this.
  unsigned threads = 1;

  std::size_t trials_for(std::size_t n) const {
    if (trials) return *trials;
    return n > 100000 ? 20 : 100;
  }
};

/// Seed for one (case, size, trial) cell, derived from the base seed with
/// a splitmix64 finalizer chain so runs are reproducible and trials are
/// independent.
std::uint64_t trial_seed(std::uint64_t base_seed, BenchCase c, std::size_t n,
                         std::size_t trial);

/// Runs the full protocol: iso pairs are (T, isomorphic_copy(T)), noniso
/// pairs are two independent random recursive trees (verdicts are recorded
/// truthfully either way). Records come back ordered by
/// (case, size, trial, algorithm) regardless of scheduling.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

/// Test seam: same protocol with caller-supplied deciders.
using Decider = std::function<bool(const Tree&, const Tree&)>;
std::vector<BenchRecord> run_bench_with(
    const BenchConfig& cfg, const std::function<Decider(BenchAlgo)>& lookup);

struct CellSummary {
  BenchAlgo algorithm = BenchAlgo::primes;
  std::size_t n = 0;
  BenchCase bench_case = BenchCase::iso;
  std::size_t count = 0;
  double median = 0.0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Aggregates seconds per (algorithm, n, case) cell, cells in first
/// appearance order. Throws empty_input when there is nothing to
/// summarise.
std::vector<CellSummary> summarize(std::span<const BenchRecord> records);

/// CSV, header row "algorithm,n,case,trial,seed,seconds,verdict",
/// '.' decimal point.
void write_csv(std::ostream& out, std::span<const BenchRecord> records);
void write_summary_csv(std::ostream& out, std::span<const CellSummary> cells);

/// Convenience wrappers; throw io_error when the path cannot be written.
void write_csv_file(const std::string& path, std::span<const BenchRecord> records);
void write_summary_csv_file(const std::string& path, std::span<const CellSummary> cells);

}  // namespace isoforest
