#include "isoforest/treegen.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "isoforest/codec.hpp"
#include "isoforest/error.hpp"

namespace isoforest {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) raise(errc::domain_error, "Rng::below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

Tree random_recursive_tree(std::size_t n, Rng& rng) {
  if (n == 0) raise(errc::domain_error, "tree size must be >= 1");
  std::vector<NodeId> parents(n);
  parents[0] = kNoParent;
  for (std::size_t i = 1; i < n; ++i)
    parents[i] = static_cast<NodeId>(rng.below(i));
  return Tree::from_parents(parents);
}

Tree isomorphic_copy(const Tree& t, Rng& rng) {
  const std::size_t n = t.size();
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<NodeId> parents(n);
  for (std::size_t u = 0; u < n; ++u) {
    const NodeId p = t.parents()[u];
    parents[static_cast<std::size_t>(perm[u])] =
        p == kNoParent ? kNoParent : perm[static_cast<std::size_t>(p)];
  }
  return Tree::from_parents(parents);
}

Tree path(std::size_t n) {
  if (n == 0) raise(errc::domain_error, "path of 0 nodes");
  std::vector<NodeId> parents(n);
  parents[0] = kNoParent;
  for (std::size_t i = 1; i < n; ++i) parents[i] = static_cast<NodeId>(i - 1);
  return Tree::from_parents(parents);
}

Tree star(std::size_t n) {
  if (n == 0) raise(errc::domain_error, "star of 0 nodes");
  std::vector<NodeId> parents(n, 0);
  parents[0] = kNoParent;
  return Tree::from_parents(parents);
}

Tree complete_kary(std::size_t k, std::size_t d) {
  if (k == 0) raise(errc::domain_error, "branching factor must be >= 1");
  constexpr std::size_t kMaxNodes = 100'000'000;
  std::size_t total = 1, level = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (level > kMaxNodes / k || total > kMaxNodes)
      raise(errc::domain_error, "complete k-ary tree too large");
    level *= k;
    total += level;
  }
  if (total > kMaxNodes) raise(errc::domain_error, "complete k-ary tree too large");

  std::vector<NodeId> parents;
  parents.reserve(total);
  parents.push_back(kNoParent);
  // BFS order: nodes of depth < d spawn k children each.
  std::size_t frontier_begin = 0, frontier_end = 1;
  for (std::size_t dep = 0; dep < d; ++dep) {
    for (std::size_t u = frontier_begin; u < frontier_end; ++u)
      for (std::size_t c = 0; c < k; ++c)
        parents.push_back(static_cast<NodeId>(u));
    frontier_begin = frontier_end;
    frontier_end = parents.size();
  }
  return Tree::from_parents(parents);
}

namespace {

// All canonical strings for sizes 1..n_max, built by dynamic programming:
// a class of size s is a root over a multiset of smaller classes with
// total size s-1. Multisets are drawn from the (size, canonical) ordered
// class list with nonincreasing ranks, so each one appears exactly once.
std::vector<std::vector<std::string>> build_canon_classes(std::size_t n_max) {
  std::vector<std::vector<std::string>> by_size(n_max + 1);
  by_size[1] = {"()"};

  // Flat rank order over all classes of size < s.
  std::vector<const std::string*> ranked;
  std::vector<std::size_t> rank_size;

  for (std::size_t s = 2; s <= n_max; ++s) {
    ranked.clear();
    rank_size.clear();
    for (std::size_t sz = 1; sz < s; ++sz)
      for (const auto& c : by_size[sz]) {
        ranked.push_back(&c);
        rank_size.push_back(sz);
      }

    std::vector<std::string> out;
    std::vector<const std::string*> chosen;
    const auto emit = [&]() {
      std::vector<std::string> parts;
      parts.reserve(chosen.size());
      for (const auto* c : chosen) parts.push_back(*c);
      std::sort(parts.begin(), parts.end());
      std::string str = "(";
      for (const auto& p : parts) str += p;
      str += ")";
      out.push_back(std::move(str));
    };
    // Pick classes with nonincreasing rank until the forest fills s-1
    // nodes. Ranks are size-ascending, so the loop can stop at the first
    // class that no longer fits.
    const auto recurse = [&](auto&& self, std::size_t remaining,
                             std::size_t max_rank) -> void {
      if (remaining == 0) {
        emit();
        return;
      }
      for (std::size_t r = 0; r < max_rank; ++r) {
        if (rank_size[r] > remaining) break;
        chosen.push_back(ranked[r]);
        self(self, remaining - rank_size[r], r + 1);
        chosen.pop_back();
      }
    };
    recurse(recurse, s - 1, ranked.size());
    std::sort(out.begin(), out.end());
    by_size[s] = std::move(out);
  }
  return by_size;
}

// Built once; immutable afterwards, so sharing across threads is safe.
const std::vector<std::vector<std::string>>& canon_classes() {
  static const std::vector<std::vector<std::string>> cache =
      build_canon_classes(kEnumerationCap);
  return cache;
}

void check_enumeration_size(std::size_t n) {
  if (n == 0 || n > kEnumerationCap)
    raise(errc::domain_error,
          "enumeration size must be in [1, " + std::to_string(kEnumerationCap) + "]");
}

}  // namespace

std::vector<std::string> enumerate_rooted_tree_canons(std::size_t n) {
  check_enumeration_size(n);
  return canon_classes()[n];
}

std::vector<Tree> enumerate_rooted_trees(std::size_t n) {
  const std::vector<std::string> canons = enumerate_rooted_tree_canons(n);
  std::vector<Tree> out;
  out.reserve(canons.size());
  for (const auto& c : canons) out.push_back(parse_parens(c));
  return out;
}

std::uint64_t SequenceTable::t_for(std::uint64_t k) const {
  const std::uint64_t n_max = a.size() - 1;
  if (k < 1 || k > b[n_max])
    raise(errc::domain_error, "t_k tabulated only for 1 <= k <= b_" +
                                  std::to_string(n_max) + " = " +
                                  std::to_string(b[n_max]));
  // b_n < k <= b_{n+1}, with b_0 = 0.
  std::uint64_t n = 0;
  while (b[n + 1] < k) ++n;
  std::uint64_t t = 1;
  for (std::uint64_t i = 1; i <= n; ++i) t += i * a[i];
  t += (n + 1) * (k - b[n]);
  return t;
}

SequenceTable sequence_table(std::size_t n_max) {
  check_enumeration_size(n_max);
  const auto& classes = canon_classes();
  SequenceTable table;
  table.a.assign(n_max + 1, 0);
  table.b.assign(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    table.a[n] = classes[n].size();
    table.b[n] = table.b[n - 1] + table.a[n];
  }
  table.t.assign(n_max + 1, 0);
  for (std::size_t k = 1; k <= n_max; ++k) table.t[k] = table.t_for(k);
  return table;
}

Tree extremal_width_tree(std::size_t k) {
  if (k == 0) raise(errc::domain_error, "width must be >= 1");
  const auto& classes = canon_classes();
  std::string encoded = "(";
  std::size_t taken = 0;
  for (std::size_t sz = 1; sz <= kEnumerationCap && taken < k; ++sz) {
    for (const auto& c : classes[sz]) {
      encoded += c;
      if (++taken == k) break;
    }
  }
  if (taken < k)
    raise(errc::domain_error,
          "width " + std::to_string(k) + " needs classes beyond the enumeration cap");
  encoded += ")";
  return parse_parens(encoded);
}

}  // namespace isoforest
