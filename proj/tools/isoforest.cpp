// Command line front end: isomorphism checks, tree generators, the class
// enumeration, a prime dump, and the timing harness.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isoforest/bench.hpp"
#include "isoforest/codec.hpp"
#include "isoforest/error.hpp"
#include "isoforest/iso.hpp"
#include "isoforest/primes.hpp"
#include "isoforest/treegen.hpp"

namespace {

using namespace isoforest;

constexpr int kExitIso = 0;
constexpr int kExitNotIso = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) raise(errc::io_error, "read failed for '" + path + "'");
  return buf.str();
}

// Format A starts with '(', format B with a digit or '-'.
Tree load_tree(const std::string& path) {
  const std::string text = read_file(path);
  for (const char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '(') return parse_parens(text);
    if (c == '-' || (c >= '0' && c <= '9')) return parse_parent_array(text);
    raise(errc::parse_error,
          std::string("unrecognised leading character '") + c + "' in " + path);
  }
  raise(errc::empty_input, path + " holds no tree");
}

int run_check(const std::string& algo, const std::string& file1,
              const std::string& file2) {
  const Tree t1 = load_tree(file1);
  const Tree t2 = load_tree(file2);
  bool verdict = false;
  if (algo == "primes")
    verdict = primes_ahu(t1, t2);
  else if (algo == "ideal")
    verdict = ideal_ahu(t1, t2);
  else if (algo == "original")
    verdict = original_ahu(t1, t2);
  else
    verdict = canonical_string(t1) == canonical_string(t2);
  std::cout << (verdict ? "isomorphic" : "not isomorphic") << "\n";
  return verdict ? kExitIso : kExitNotIso;
}

int run_gen(const std::string& kind, std::size_t n, std::size_t k,
            std::uint64_t seed) {
  Tree t = [&] {
    if (kind == "recursive") {
      Rng rng(seed);
      return random_recursive_tree(n, rng);
    }
    if (kind == "path") return path(n);
    if (kind == "star") return star(n);
    if (kind == "kary") return complete_kary(k, n);
    return extremal_width_tree(n);
  }();
  std::cout << to_parens(t) << "\n";
  return 0;
}

int run_enum(std::size_t n) {
  for (const auto& canon : enumerate_rooted_tree_canons(n)) std::cout << canon << "\n";
  return 0;
}

int run_primes(std::size_t count) {
  if (count == 0) return 0;
  SieveState st = initial_state();
  std::uint64_t p = 2;
  std::cout << p << "\n";
  for (std::size_t i = 1; i < count; ++i) {
    p = next_prime(st, p);
    std::cout << p << "\n";
  }
  return 0;
}

BenchAlgo parse_algo(const std::string& name) {
  if (name == "primes") return BenchAlgo::primes;
  if (name == "original") return BenchAlgo::original;
  raise(errc::domain_error, "unknown algorithm '" + name + "' (primes|original)");
}

int run_bench_cmd(const BenchConfig& cfg, const std::string& out_path) {
  const auto records = run_bench(cfg);
  write_csv_file(out_path, records);
  const auto cells = summarize(records);
  write_summary_csv_file(out_path + ".summary.csv", cells);
  write_summary_csv(std::cout, cells);
  std::cerr << records.size() << " records -> " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted-tree isomorphism toolkit"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Decide whether two trees are isomorphic");
  std::string check_algo = "primes";
  std::string file1, file2;
  check->add_option("--algo", check_algo, "primes|ideal|original|oracle")
      ->check(CLI::IsMember({"primes", "ideal", "original", "oracle"}));
  check->add_option("file1", file1, "first tree (format A or B)")->required();
  check->add_option("file2", file2, "second tree (format A or B)")->required();

  auto* gen = app.add_subcommand("gen", "Emit a tree in parenthesis format");
  std::string gen_kind;
  std::size_t gen_n = 0, gen_k = 2;
  std::uint64_t gen_seed = 1;
  gen->add_option("--kind", gen_kind, "recursive|path|star|kary|extremal")
      ->required()
      ->check(CLI::IsMember({"recursive", "path", "star", "kary", "extremal"}));
  gen->add_option("--n", gen_n,
                  "node count (recursive|path|star), depth (kary), width (extremal)")
      ->required();
  gen->add_option("--k", gen_k, "branching factor for kary");
  gen->add_option("--seed", gen_seed, "seed for recursive");

  auto* enumerate = app.add_subcommand(
      "enum", "List one canonical tree per isomorphism class of size N");
  std::size_t enum_n = 0;
  enumerate->add_option("--n", enum_n, "tree size")->required();

  auto* primes_cmd = app.add_subcommand("primes", "Print the first K primes");
  std::size_t primes_count = 0;
  primes_cmd->add_option("--count", primes_count, "how many primes")->required();

  auto* bench = app.add_subcommand("bench", "Time the deciders on random trees");
  BenchConfig cfg;
  std::size_t bench_trials = 0;
  std::vector<std::string> bench_algos;
  std::vector<std::string> bench_cases;
  std::string bench_out = "results.csv";
  bench->add_option("--sizes", cfg.sizes, "tree sizes")->delimiter(',');
  bench->add_option("--trials", bench_trials,
                    "trials per cell (default 100, 20 above 10^5)");
  bench->add_option("--algos", bench_algos, "primes,original")->delimiter(',');
  bench->add_option("--cases", bench_cases, "iso,noniso")->delimiter(',');
  bench->add_option("--seed", cfg.base_seed, "base seed");
  bench->add_option("--out", bench_out, "CSV output path");
  bench->add_option("--threads", cfg.threads,
                    "worker threads (ISOFOREST_THREADS caps this)");
  bench->add_flag("--warmup", cfg.warmup, "run each decider once untimed first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (check->parsed()) return run_check(check_algo, file1, file2);
    if (gen->parsed()) return run_gen(gen_kind, gen_n, gen_k, gen_seed);
    if (enumerate->parsed()) return run_enum(enum_n);
    if (primes_cmd->parsed()) return run_primes(primes_count);
    if (bench->parsed()) {
      if (bench_trials > 0) cfg.trials = bench_trials;
      if (!bench_algos.empty()) {
        cfg.algos.clear();
        for (const auto& name : bench_algos) cfg.algos.push_back(parse_algo(name));
      }
      if (!bench_cases.empty()) {
        cfg.cases.clear();
        for (const auto& name : bench_cases) {
          if (name == "iso")
            cfg.cases.push_back(BenchCase::iso);
          else if (name == "noniso")
            cfg.cases.push_back(BenchCase::noniso);
          else
            raise(errc::domain_error, "unknown case '" + name + "' (iso|noniso)");
        }
      }
      return run_bench_cmd(cfg, bench_out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
