#include "isoforest/treegen.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "isoforest/codec.hpp"
#include "isoforest/error.hpp"
#include "isoforest/iso.hpp"
#include "test_util.hpp"

using namespace isoforest;
using isoforest::testing::error_code_of;

TEST_SUITE_BEGIN("treegen");

TEST_CASE("splitmix stream is deterministic") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(43);
  CHECK(Rng(42).next() != c.next());
}

TEST_CASE("below stays in range") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) CHECK(rng.below(7) < 7);
  CHECK(rng.below(1) == 0);
  CHECK(error_code_of([&] { rng.below(0); }) == errc::domain_error);
}

TEST_CASE("random recursive tree shape") {
  Rng rng(5);
  CHECK(random_recursive_tree(1, rng).size() == 1);
  const Tree two = random_recursive_tree(2, rng);
  CHECK(two.parents() == std::vector<NodeId>{kNoParent, 0});
  const Tree t = random_recursive_tree(500, rng);
  CHECK(t.root() == 0);
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t.parents()[i] < static_cast<NodeId>(i));
  CHECK(error_code_of([&] { random_recursive_tree(0, rng); }) == errc::domain_error);
}

TEST_CASE("equal seeds give bit-identical trees") {
  Rng a(987654321), b(987654321);
  const Tree ta = random_recursive_tree(10000, a);
  const Tree tb = random_recursive_tree(10000, b);
  CHECK(ta.parents() == tb.parents());
}

TEST_CASE("isomorphic_copy preserves the canonical string") {
  Rng rng(77);
  const Tree single = build_from_parent_array({kNoParent});
  CHECK(isomorphic_copy(single, rng).size() == 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const Tree t = random_recursive_tree(1 + rng.below(100), rng);
    const Tree copy = isomorphic_copy(t, rng);
    CHECK(copy.size() == t.size());
    CHECK(canonical_string(copy) == canonical_string(t));
  }
}

TEST_CASE("fixed shapes") {
  CHECK(path(1).size() == 1);
  CHECK(star(1).size() == 1);
  CHECK(to_parens(path(1)) == to_parens(star(1)));
  CHECK(depth(path(6)) == 5);
  CHECK(degree(star(6)) == 5);
  const Tree k22 = complete_kary(2, 2);
  CHECK(k22.size() == 7);
  CHECK(depth(k22) == 2);
  CHECK(degree(k22) == 2);
  CHECK(complete_kary(3, 0).size() == 1);
  CHECK(complete_kary(1, 4).size() == 5);  // degenerates to a path
  CHECK(error_code_of([] { path(0); }) == errc::domain_error);
  CHECK(error_code_of([] { star(0); }) == errc::domain_error);
  CHECK(error_code_of([] { complete_kary(0, 2); }) == errc::domain_error);
  CHECK(error_code_of([] { complete_kary(10, 30); }) == errc::domain_error);
}

TEST_CASE("enumeration counts match the class numbers") {
  const std::vector<std::uint64_t> expected{1, 1, 2, 4, 9, 20, 48, 115};
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(enumerate_rooted_trees(n).size() == expected[n - 1]);
  // Larger counts pinned to the published sequence values.
  CHECK(enumerate_rooted_tree_canons(9).size() == 286);
  CHECK(enumerate_rooted_tree_canons(10).size() == 719);
  CHECK(error_code_of([] { enumerate_rooted_trees(0); }) == errc::domain_error);
  CHECK(error_code_of([] { enumerate_rooted_trees(13); }) == errc::domain_error);
}

TEST_CASE("enumeration yields distinct canonical classes in order") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto canons = enumerate_rooted_tree_canons(n);
    std::set<std::string> distinct(canons.begin(), canons.end());
    CHECK(distinct.size() == canons.size());
    CHECK(std::is_sorted(canons.begin(), canons.end()));
    for (const auto& c : canons) {
      const Tree t = parse_parens(c);
      CHECK(t.size() == n);
      CHECK(canonical_string(t) == c);
    }
  }
}

TEST_CASE("size-three classes are the path and the star") {
  const auto canons = enumerate_rooted_tree_canons(3);
  CHECK(canons == std::vector<std::string>{"((()))", "(()())"});
}

TEST_CASE("sequence table reproduces the first eight rows") {
  const SequenceTable table = sequence_table(8);
  CHECK(std::vector<std::uint64_t>(table.a.begin() + 1, table.a.end()) ==
        std::vector<std::uint64_t>{1, 1, 2, 4, 9, 20, 48, 115});
  CHECK(std::vector<std::uint64_t>(table.b.begin() + 1, table.b.end()) ==
        std::vector<std::uint64_t>{1, 2, 4, 8, 17, 37, 85, 200});
  CHECK(std::vector<std::uint64_t>(table.t.begin() + 1, table.t.end()) ==
        std::vector<std::uint64_t>{2, 4, 7, 10, 14, 18, 22, 26});
  CHECK(table.b[8] - table.b[7] == table.a[8]);
  CHECK(table.t_for(5) == 14);
  CHECK(error_code_of([&] { table.t_for(0); }) == errc::domain_error);
  CHECK(error_code_of([&] { table.t_for(201); }) == errc::domain_error);
}

TEST_CASE("extremal width trees") {
  CHECK(extremal_width_tree(1).size() == 2);
  const Tree w5 = extremal_width_tree(5);
  CHECK(w5.size() == 14);
  CHECK(width(w5) == 5);
  const Tree w8 = extremal_width_tree(8);
  CHECK(w8.size() == 26);
  CHECK(width(w8) == 8);
  CHECK(error_code_of([] { extremal_width_tree(0); }) == errc::domain_error);
}

TEST_CASE("extremal width trees hit the minimum size for every k up to 50") {
  const SequenceTable table = sequence_table(12);
  for (std::size_t k = 1; k <= 50; ++k) {
    const Tree t = extremal_width_tree(k);
    CHECK(t.size() == table.t_for(k));
    CHECK(width(t) == static_cast<int>(k));
  }
}

TEST_SUITE_END();
