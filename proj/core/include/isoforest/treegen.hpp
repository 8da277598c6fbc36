#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isoforest/tree.hpp"

namespace isoforest {

/// splitmix64 stream. Chosen because it is tiny, fully specified by the
/// two lines in next(), and seeds anything (including 0), so every corpus
/// in this repo is reproducible from a 64-bit seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), unbiased via rejection. bound must be >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Random recursive tree: node 0 is the root, node i attaches to a parent
/// drawn uniformly from {0, ..., i-1}.
Tree random_recursive_tree(std::size_t n, Rng& rng);

/// Same abstract tree under a random relabelling of the node ids (the
/// root keeps the root role). Canonical string is preserved; the parent
/// array is scrambled.
Tree isomorphic_copy(const Tree& t, Rng& rng);

Tree path(std::size_t n);
Tree star(std::size_t n);  // n nodes total: a root with n-1 leaves

/// Complete k-ary tree of the given depth (every internal node has k
/// children). Throws domain_error when k = 0 or the node count would be
/// absurd.
Tree complete_kary(std::size_t k, std::size_t d);

/// Cap on exhaustive enumeration; the class counts explode beyond this.
inline constexpr std::size_t kEnumerationCap = 12;

/// One representative per isomorphism class of rooted trees with n nodes,
/// ordered by canonical string ascending. n must be in [1, kEnumerationCap].
std::vector<Tree> enumerate_rooted_trees(std::size_t n);

/// Same enumeration as canonical strings (cheaper when only the class
/// structure matters).
std::vector<std::string> enumerate_rooted_tree_canons(std::size_t n);

/// a[n] = number of classes of size n, b[n] = cumulative count,
/// t[k] = minimal node count of a tree of width k. Vectors are 1-indexed;
/// slot 0 is unused.
struct SequenceTable {
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
  std::vector<std::uint64_t> t;

  /// t_k = 1 + sum_{i<=n} i*a[i] + (n+1)(k - b[n]) with b[n] < k <= b[n+1].
  /// Valid for 1 <= k <= b.back().
  std::uint64_t t_for(std::uint64_t k) const;
};

SequenceTable sequence_table(std::size_t n_max);

/// Smallest tree of width k: a root whose children are the first k
/// pairwise non-isomorphic trees in (size, canonical order). Node count is
/// t_k.
Tree extremal_width_tree(std::size_t k);

}  // namespace isoforest
