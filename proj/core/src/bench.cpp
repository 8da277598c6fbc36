#include "isoforest/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include "isoforest/error.hpp"
#include "isoforest/iso.hpp"
#include "isoforest/treegen.hpp"

namespace isoforest {

const char* to_string(BenchAlgo a) noexcept {
  return a == BenchAlgo::primes ? "primes" : "original";
}

const char* to_string(BenchCase c) noexcept {
  return c == BenchCase::iso ? "iso" : "noniso";
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

unsigned thread_cap_from_env(unsigned requested) {
  const char* env = std::getenv("ISOFOREST_THREADS");
  if (!env || !*env) return requested;
  const unsigned long cap = std::strtoul(env, nullptr, 10);
  if (cap == 0) return requested;
  return std::min<unsigned long>(requested, cap);
}

struct Task {
  BenchCase bench_case;
  std::size_t n;
  std::size_t trial;
  std::uint64_t seed;
  std::size_t record_base;  // index of the first record of this task
};

}  // namespace

std::uint64_t trial_seed(std::uint64_t base_seed, BenchCase c, std::size_t n,
                         std::size_t trial) {
  std::uint64_t s = mix64(base_seed + (c == BenchCase::iso ? 1 : 2));
  s = mix64(s + static_cast<std::uint64_t>(n));
  s = mix64(s + static_cast<std::uint64_t>(trial));
  return s;
}

std::vector<BenchRecord> run_bench_with(
    const BenchConfig& cfg, const std::function<Decider(BenchAlgo)>& lookup) {
  std::vector<Task> tasks;
  for (const BenchCase c : cfg.cases)
    for (const std::size_t n : cfg.sizes) {
      if (n == 0) raise(errc::domain_error, "bench size must be >= 1");
      for (std::size_t trial = 0; trial < cfg.trials_for(n); ++trial)
        tasks.push_back({c, n, trial, trial_seed(cfg.base_seed, c, n, trial),
                         tasks.size() * cfg.algos.size()});
    }

  std::vector<BenchRecord> records(tasks.size() * cfg.algos.size());
  const auto run_task = [&](const Task& task) {
    // Generation is deliberately outside the timed region.
    Rng rng(task.seed);
    const Tree t1 = random_recursive_tree(task.n, rng);
    const Tree t2 = task.bench_case == BenchCase::iso
                        ? isomorphic_copy(t1, rng)
                        : random_recursive_tree(task.n, rng);
    for (std::size_t ai = 0; ai < cfg.algos.size(); ++ai) {
      const BenchAlgo algo = cfg.algos[ai];
      const Decider decide = lookup(algo);
      if (cfg.warmup) (void)decide(t1, t2);
      const auto start = std::chrono::steady_clock::now();
      const bool verdict = decide(t1, t2);
      const auto stop = std::chrono::steady_clock::now();
      BenchRecord& rec = records[task.record_base + ai];
      rec.algorithm = algo;
      rec.n = task.n;
      rec.bench_case = task.bench_case;
      rec.trial = task.trial;
      rec.seed = task.seed;
      rec.seconds = std::chrono::duration<double>(stop - start).count();
      rec.verdict = verdict;
    }
  };

  const unsigned workers =
      std::min<std::size_t>(thread_cap_from_env(std::max(1u, cfg.threads)), tasks.size());
  if (workers <= 1) {
    for (const Task& task : tasks) run_task(task);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          run_task(tasks[i]);
        }
      });
    for (auto& th : pool) th.join();
  }
  return records;
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  return run_bench_with(cfg, [](BenchAlgo algo) -> Decider {
    if (algo == BenchAlgo::primes)
      return [](const Tree& a, const Tree& b) { return primes_ahu(a, b); };
    return [](const Tree& a, const Tree& b) { return original_ahu(a, b); };
  });
}

std::vector<CellSummary> summarize(std::span<const BenchRecord> records) {
  if (records.empty()) raise(errc::empty_input, "no records to summarize");
  std::vector<CellSummary> cells;
  std::vector<std::vector<double>> samples;
  for (const BenchRecord& r : records) {
    std::size_t i = 0;
    for (; i < cells.size(); ++i)
      if (cells[i].algorithm == r.algorithm && cells[i].n == r.n &&
          cells[i].bench_case == r.bench_case)
        break;
    if (i == cells.size()) {
      cells.push_back({r.algorithm, r.n, r.bench_case, 0, 0, 0, 0, 0});
      samples.emplace_back();
    }
    samples[i].push_back(r.seconds);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& xs = samples[i];
    std::sort(xs.begin(), xs.end());
    CellSummary& c = cells[i];
    c.count = xs.size();
    c.min = xs.front();
    c.max = xs.back();
    c.median = xs.size() % 2 ? xs[xs.size() / 2]
                             : (xs[xs.size() / 2 - 1] + xs[xs.size() / 2]) / 2.0;
    double sum = 0;
    for (const double x : xs) sum += x;
    c.mean = sum / static_cast<double>(xs.size());
  }
  return cells;
}

namespace {

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", s);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "algorithm,n,case,trial,seed,seconds,verdict\n";
  for (const BenchRecord& r : records) {
    out << to_string(r.algorithm) << ',' << r.n << ',' << to_string(r.bench_case)
        << ',' << r.trial << ',' << r.seed << ',' << format_seconds(r.seconds)
        << ',' << (r.verdict ? "true" : "false") << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const CellSummary> cells) {
  out << "algorithm,n,case,count,median_s,mean_s,min_s,max_s\n";
  for (const CellSummary& c : cells) {
    out << to_string(c.algorithm) << ',' << c.n << ',' << to_string(c.bench_case)
        << ',' << c.count << ',' << format_seconds(c.median) << ','
        << format_seconds(c.mean) << ',' << format_seconds(c.min) << ','
        << format_seconds(c.max) << '\n';
  }
}

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(errc::io_error, "cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

void write_csv_file(const std::string& path, std::span<const BenchRecord> records) {
  auto out = open_for_write(path);
  write_csv(out, records);
  if (!out) raise(errc::io_error, "write failed for '" + path + "'");
}

void write_summary_csv_file(const std::string& path,
                            std::span<const CellSummary> cells) {
  auto out = open_for_write(path);
  write_summary_csv(out, cells);
  if (!out) raise(errc::io_error, "write failed for '" + path + "'");
}

}  // namespace isoforest
