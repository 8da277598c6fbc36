#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isoforest/codec.hpp"
#include "isoforest/error.hpp"
#include "isoforest/tree.hpp"

namespace isoforest::testing {

// Runs f and reports the error code it raised, if any.
template <class F>
std::optional<errc> error_code_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// The subtree rooted at u as a standalone tree (node u becomes the root).
// Test-only oracle helper; quadratic use is fine at test scale.
inline Tree subtree_of(const Tree& t, NodeId u) {
  std::vector<NodeId> ids{u};
  std::vector<NodeId> new_id(t.size(), kNoParent);
  new_id[static_cast<std::size_t>(u)] = 0;
  std::vector<NodeId> parents{kNoParent};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (const NodeId c : t.children(ids[i])) {
      new_id[static_cast<std::size_t>(c)] = static_cast<NodeId>(ids.size());
      ids.push_back(c);
      parents.push_back(new_id[static_cast<std::size_t>(ids[i])]);
    }
  }
  return Tree::from_parents(parents);
}

// Parent array of the ten-node tree on the left of the isomorphic pair
// used throughout the tests: a root with four children, one of which has
// three children, plus a grandchild chain.
inline std::vector<NodeId> ten_node_parents() {
  return {kNoParent, 0, 0, 0, 0, 1, 1, 1, 3, 5};
}

inline Tree ten_node_tree() { return Tree::from_parents(ten_node_parents()); }

// The same tree drawn with the children shuffled.
inline Tree ten_node_tree_shuffled() {
  return parse_parens("(()(())()(()(())()))");
}

}  // namespace isoforest::testing
