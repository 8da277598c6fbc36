#include "isoforest/tree.hpp"

#include <algorithm>
#include <limits>

#include "isoforest/error.hpp"

namespace isoforest {

Tree Tree::from_parents(const std::vector<NodeId>& parents) {
  const std::size_t n = parents.size();
  if (n == 0) raise(errc::empty_input, "parent array is empty");
  if (n > static_cast<std::size_t>(std::numeric_limits<NodeId>::max()))
    raise(errc::domain_error, "tree too large for 32-bit node ids");

  Tree t;
  t.parents_ = parents;
  t.root_ = kNoParent;

  for (std::size_t u = 0; u < n; ++u) {
    const NodeId p = parents[u];
    if (p == kNoParent) {
      if (t.root_ != kNoParent)
        raise(errc::multiple_roots, "more than one root entry");
      t.root_ = static_cast<NodeId>(u);
    } else if (p < 0 || static_cast<std::size_t>(p) >= n) {
      raise(errc::index_out_of_range,
            "parent index " + std::to_string(p) + " out of range");
    }
  }
  if (t.root_ == kNoParent)
    raise(errc::cycle_detected, "no root entry, the parent relation must cycle");

  // Resolve depths by walking parent chains; a chain that revisits itself
  // before reaching a resolved node is a cycle.
  t.depths_.assign(n, -1);
  t.depths_[static_cast<std::size_t>(t.root_)] = 0;
  std::vector<char> on_chain(n, 0);
  std::vector<NodeId> chain;
  for (std::size_t u = 0; u < n; ++u) {
    if (t.depths_[u] >= 0) continue;
    chain.clear();
    NodeId v = static_cast<NodeId>(u);
    while (t.depths_[static_cast<std::size_t>(v)] < 0) {
      if (on_chain[static_cast<std::size_t>(v)]) {
        raise(errc::cycle_detected,
              "node " + std::to_string(v) + " is part of a parent cycle");
      }
      on_chain[static_cast<std::size_t>(v)] = 1;
      chain.push_back(v);
      v = parents[static_cast<std::size_t>(v)];
    }
    std::int32_t d = t.depths_[static_cast<std::size_t>(v)];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      t.depths_[static_cast<std::size_t>(*it)] = ++d;
      on_chain[static_cast<std::size_t>(*it)] = 0;
    }
  }
  t.depth_ = *std::max_element(t.depths_.begin(), t.depths_.end());

  // Children in CSR form; iterating u ascending makes every child list
  // ascending by id, the storage order contract.
  std::vector<std::int32_t> counts(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u)
    if (parents[u] != kNoParent) ++counts[static_cast<std::size_t>(parents[u]) + 1];
  for (std::size_t i = 1; i <= n; ++i) counts[i] += counts[i - 1];
  t.child_offsets_ = counts;
  t.child_ids_.resize(n - 1);
  std::vector<std::int32_t> cursor(t.child_offsets_.begin(), t.child_offsets_.end() - 1);
  for (std::size_t u = 0; u < n; ++u) {
    const NodeId p = parents[u];
    if (p != kNoParent)
      t.child_ids_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(p)]++)] =
          static_cast<NodeId>(u);
  }
  return t;
}

Tree build_from_parent_array(const std::vector<NodeId>& parents) {
  return Tree::from_parents(parents);
}

LevelIndex level_index(const Tree& t) {
  LevelIndex idx;
  idx.depth = t.depth();
  idx.by_level.resize(static_cast<std::size_t>(idx.depth) + 1);
  const std::size_t n = t.size();
  for (std::size_t u = 0; u < n; ++u) {
    idx.by_level[static_cast<std::size_t>(t.level(static_cast<NodeId>(u)))]
        .push_back(static_cast<NodeId>(u));
    ++idx.node_visits;
  }
  return idx;
}

int degree(const Tree& t) {
  int deg = 0;
  for (std::size_t u = 0; u < t.size(); ++u)
    deg = std::max(deg, t.node_degree(static_cast<NodeId>(u)));
  return deg;
}

int depth(const Tree& t) { return t.depth(); }

std::vector<NodeId> leaves(const Tree& t) {
  std::vector<NodeId> out;
  for (std::size_t u = 0; u < t.size(); ++u)
    if (t.is_leaf(static_cast<NodeId>(u))) out.push_back(static_cast<NodeId>(u));
  return out;
}

}  // namespace isoforest
