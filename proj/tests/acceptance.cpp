// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. Exit code 0 iff everything passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "isoforest/bench.hpp"
#include "isoforest/codec.hpp"
#include "isoforest/iso.hpp"
#include "isoforest/primes.hpp"
#include "isoforest/product_tree.hpp"
#include "isoforest/treegen.hpp"

using namespace isoforest;

namespace {

using Clock = std::chrono::steady_clock;

// Returns std::nullopt on success, a short failure description otherwise;
// may leave extra detail in note either way.
using CriterionBody = std::function<std::optional<std::string>(std::string& note)>;

int failures = 0;

void run_criterion(int id, const std::string& label, const CriterionBody& body) {
  const auto start = Clock::now();
  std::optional<std::string> failure;
  std::string note;
  try {
    failure = body(note);
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (failure) {
    ++failures;
    std::printf("FAIL criterion %d: %s (%.1fs) -- %s\n", id, label.c_str(), elapsed,
                failure->c_str());
  } else if (note.empty()) {
    std::printf("PASS criterion %d: %s (%.1fs)\n", id, label.c_str(), elapsed);
  } else {
    std::printf("PASS criterion %d: %s (%.1fs) [%s]\n", id, label.c_str(), elapsed,
                note.c_str());
  }
  std::fflush(stdout);
}

std::optional<std::string> oracle_equivalence_exhaustive(std::string& note) {
  const auto start = Clock::now();
  std::size_t pairs_at_8 = 0;
  std::size_t mismatches = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::vector<Tree> classes = enumerate_rooted_trees(n);
    std::vector<std::string> canons;
    canons.reserve(classes.size());
    for (const Tree& t : classes) canons.push_back(canonical_string(t));
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = 0; j < classes.size(); ++j) {
        if (n == 8) ++pairs_at_8;
        const bool expected = canons[i] == canons[j];
        if (primes_ahu(classes[i], classes[j]) != expected) ++mismatches;
        if (ideal_ahu(classes[i], classes[j]) != expected) ++mismatches;
        if (original_ahu(classes[i], classes[j]) != expected) ++mismatches;
      }
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (pairs_at_8 != 13225)
    return "expected 13225 ordered pairs at n=8, saw " + std::to_string(pairs_at_8);
  if (mismatches != 0) return std::to_string(mismatches) + " decider/oracle mismatches";
  if (elapsed >= 60.0)
    return "exhaustive sweep took " + std::to_string(elapsed) + "s (budget 60s)";
  note = "13225 ordered pairs at n=8, 0 mismatches";
  return std::nullopt;
}

std::optional<std::string> oracle_equivalence_sampled(std::string&) {
  const std::vector<Tree> classes = enumerate_rooted_trees(10);
  if (classes.size() != 719)
    return "expected 719 classes at n=10, saw " + std::to_string(classes.size());
  std::vector<std::string> canons;
  canons.reserve(classes.size());
  for (const Tree& t : classes) canons.push_back(canonical_string(t));
  Rng rng(20241017);
  std::size_t mismatches = 0;
  for (std::size_t trial = 0; trial < 100000; ++trial) {
    const std::size_t i = rng.below(classes.size());
    const std::size_t j = rng.below(classes.size());
    const bool expected = canons[i] == canons[j];
    if (primes_ahu(classes[i], classes[j]) != expected) ++mismatches;
    if (ideal_ahu(classes[i], classes[j]) != expected) ++mismatches;
    if (original_ahu(classes[i], classes[j]) != expected) ++mismatches;
  }
  if (mismatches != 0) return std::to_string(mismatches) + " mismatches in 10^5 pairs";
  return std::nullopt;
}

std::optional<std::string> table_one_reproduction(std::string&) {
  const SequenceTable table = sequence_table(8);
  const std::vector<std::uint64_t> a{1, 1, 2, 4, 9, 20, 48, 115};
  const std::vector<std::uint64_t> b{1, 2, 4, 8, 17, 37, 85, 200};
  const std::vector<std::uint64_t> t{2, 4, 7, 10, 14, 18, 22, 26};
  if (std::vector<std::uint64_t>(table.a.begin() + 1, table.a.end()) != a)
    return "class counts a_1..a_8 are off";
  if (std::vector<std::uint64_t>(table.b.begin() + 1, table.b.end()) != b)
    return "cumulative counts b_1..b_8 are off";
  if (std::vector<std::uint64_t>(table.t.begin() + 1, table.t.end()) != t)
    return "width thresholds t_1..t_8 are off";
  const Tree w5 = extremal_width_tree(5);
  if (w5.size() != 14)
    return "extremal width-5 tree has " + std::to_string(w5.size()) + " nodes, want 14";
  if (width(w5) != 5)
    return "extremal width-5 tree has width " + std::to_string(width(w5));
  return std::nullopt;
}

std::optional<std::string> prime_layer(std::string&) {
  constexpr std::uint64_t kSieveLimit = 1000000;
  const auto expected = naive_sieve(prime_bounds(100006).upper);

  for (const bool wheel : {true, false}) {
    SieveState st = initial_state(wheel);
    while (st.n_sieve < kSieveLimit) extend_sieve(st);
    std::size_t count = 0;
    while (count < st.primes.size() && st.primes[count] <= kSieveLimit) ++count;
    std::size_t naive_count = 0;
    while (naive_count < expected.size() && expected[naive_count] <= kSieveLimit)
      ++naive_count;
    if (count != naive_count ||
        !std::equal(st.primes.begin(), st.primes.begin() + count, expected.begin()))
      return std::string("segmented sieve (wheel=") + (wheel ? "on" : "off") +
             ") diverges from the naive sieve below 10^6";
  }

  for (std::uint64_t n = 6; n <= 100000; ++n) {
    const PrimeBounds b = prime_bounds(n);
    const std::uint64_t pn = expected[n - 1];
    if (!(b.lower < pn && pn < b.upper))
      return "bounds fail at n=" + std::to_string(n);
  }

  SieveState st = initial_state();
  std::vector<std::uint64_t> collected = st.primes;
  std::uint64_t p = st.primes.back();
  for (std::size_t i = 0; i < 100000; ++i) {
    p = next_prime(st, p);
    collected.push_back(p);
  }
  if (collected.size() != 100006) return "scan did not yield 10^5 + 6 primes";
  if (!std::equal(collected.begin(), collected.end(), expected.begin()))
    return "next_prime scan diverges from the first 10^5 + 6 primes";
  return std::nullopt;
}

constexpr std::size_t kInvarianceSizes[] = {10, 100, 1000, 10000};
constexpr std::uint64_t kInvarianceSeed = 6021023;

std::optional<std::string> invariance(std::string&) {
  std::size_t failuresHere = 0;
  for (const std::size_t n : kInvarianceSizes) {
    Rng rng(kInvarianceSeed + n);
    for (int trial = 0; trial < 1000; ++trial) {
      const Tree t = random_recursive_tree(n, rng);
      const Tree copy = isomorphic_copy(t, rng);
      if (!primes_ahu(t, copy)) ++failuresHere;
      if (!ideal_ahu(t, copy)) ++failuresHere;
      if (!original_ahu(t, copy)) ++failuresHere;
    }
  }
  if (failuresHere != 0)
    return std::to_string(failuresHere) + " rejected shuffle+relabel copies";
  return std::nullopt;
}

std::optional<std::string> width_bound(std::string&) {
  const SequenceTable table = sequence_table(12);
  std::size_t violations = 0;
  std::string detail;
  const auto check = [&](const Tree& t) {
    const auto w = static_cast<std::uint64_t>(width(t));
    if (t.size() < table.t_for(w)) {
      ++violations;
      if (detail.size() < 200) {
        detail += " [size " + std::to_string(t.size()) + " < t_" +
                  std::to_string(w) + " = " + std::to_string(table.t_for(w)) + "]";
      }
    }
  };
  // Criterion 1 corpus: every enumerated class up to size 8.
  for (std::size_t n = 1; n <= 8; ++n)
    for (const Tree& t : enumerate_rooted_trees(n)) check(t);
  // Criterion 3 corpus.
  check(extremal_width_tree(5));
  // Criterion 5 corpus, regenerated with the same seeds.
  for (const std::size_t n : kInvarianceSizes) {
    Rng rng(kInvarianceSeed + n);
    for (int trial = 0; trial < 1000; ++trial) {
      const Tree t = random_recursive_tree(n, rng);
      const Tree copy = isomorphic_copy(t, rng);
      check(t);
      check(copy);
    }
  }
  if (violations != 0)
    return std::to_string(violations) + " tree(s) below the t_width threshold:" +
           detail;
  return std::nullopt;
}

std::optional<std::string> product_tree_check(std::string&) {
  const auto primes = naive_sieve(100000);
  Rng rng(777);
  for (int list = 0; list < 1000; ++list) {
    // Log-uniform lengths up to 10^4 keep the fold oracle affordable while
    // still exercising four orders of magnitude.
    std::uint64_t lo = 1;
    for (std::uint64_t i = rng.below(5); i > 0; --i) lo *= 10;
    const std::uint64_t hi = std::min<std::uint64_t>(lo * 10, 10000);
    const std::uint64_t len = lo + rng.below(hi - lo + 1);
    std::vector<BigNat> xs;
    xs.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i)
      xs.emplace_back(primes[rng.below(primes.size())]);
    BigNat fold = 1;
    for (const auto& x : xs) fold *= x;
    if (product(std::span<const BigNat>(xs)) != fold)
      return "divide-and-conquer product diverges from the fold on list " +
             std::to_string(list);
  }
  return std::nullopt;
}

double median_of(std::span<const CellSummary> cells, BenchAlgo a, std::size_t n,
                 BenchCase c) {
  for (const auto& cell : cells)
    if (cell.algorithm == a && cell.n == n && cell.bench_case == c) return cell.median;
  return -1.0;
}

std::optional<std::string> performance(std::string& note) {
  BenchConfig cfg;
  cfg.sizes = {100000, 1000000};
  cfg.trials = 5;
  cfg.base_seed = 424242;
  const auto records = run_bench(cfg);
  const auto cells = summarize(records);

  // (a) every 10^6 iso-case check finishes within 30 seconds.
  for (const auto& r : records)
    if (r.n == 1000000 && r.bench_case == BenchCase::iso && r.seconds >= 30.0)
      return std::string(to_string(r.algorithm)) + " took " +
             std::to_string(r.seconds) + "s on an iso check at n=10^6";

  // (b) decade ratio of iso medians stays in the linear-growth window.
  std::ostringstream measured;
  measured.precision(3);
  for (const BenchAlgo algo : {BenchAlgo::primes, BenchAlgo::original}) {
    const double m5 = median_of(cells, algo, 100000, BenchCase::iso);
    const double m6 = median_of(cells, algo, 1000000, BenchCase::iso);
    if (m5 <= 0 || m6 <= 0) return "missing medians";
    const double ratio = m6 / m5;
    measured << to_string(algo) << " x" << ratio << " (" << m6 << "s at 10^6) ";
    if (ratio < 5.0 || ratio > 20.0) {
      std::ostringstream msg;
      msg << to_string(algo) << " median ratio 10^6/10^5 = " << ratio
          << " outside [5, 20]";
      return msg.str();
    }
  }

  // (c) concluding "not isomorphic" is no slower than concluding
  // "isomorphic" for the prime decider at n=10^6.
  const double iso_median = median_of(cells, BenchAlgo::primes, 1000000, BenchCase::iso);
  const double noniso_median =
      median_of(cells, BenchAlgo::primes, 1000000, BenchCase::noniso);
  if (!(noniso_median <= iso_median)) {
    std::ostringstream msg;
    msg << "noniso median " << noniso_median << "s > iso median " << iso_median
        << "s at n=10^6";
    return msg.str();
  }
  measured << "| primes noniso/iso " << noniso_median << "/" << iso_median << "s";
  note = measured.str();
  return std::nullopt;
}

}  // namespace

int main() {
  run_criterion(1, "oracle equivalence, exhaustive ordered pairs up to n=8",
                oracle_equivalence_exhaustive);
  run_criterion(2, "oracle equivalence, 10^5 sampled pairs from the n=10 classes",
                oracle_equivalence_sampled);
  run_criterion(3, "sequence table rows and the extremal width-5 tree",
                table_one_reproduction);
  run_criterion(4, "segmented sieve vs naive, p_n bounds, next_prime scan",
                prime_layer);
  run_criterion(5, "deciders accept 1000 shuffle+relabel pairs per size",
                invariance);
  run_criterion(6, "node count >= t_width over all acceptance corpora",
                width_bound);
  run_criterion(7, "product tree equals sequential fold on random prime lists",
                product_tree_check);
  run_criterion(8, "linear-growth timing envelope at n=10^5..10^6",
                performance);
  if (failures != 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
