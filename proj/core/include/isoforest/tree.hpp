#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace isoforest {

using NodeId = std::int32_t;

/// Parent slot of the root in a parent array.
inline constexpr NodeId kNoParent = -1;

/// Immutable rooted unordered tree over dense node ids 0..n-1.
///
/// Children are stored in ascending id order; that order is a storage
/// artifact and carries no meaning, the tree is unordered. Node depths and
/// the tree depth are fixed at construction, so all queries are O(1).
class Tree {
 public:
  /// Builds a tree from a parent array (kNoParent marks the root).
  /// Throws Error with code multiple_roots, cycle_detected,
  /// index_out_of_range or empty_input on malformed input.
  static Tree from_parents(const std::vector<NodeId>& parents);

  std::size_t size() const noexcept { return parents_.size(); }
  NodeId root() const noexcept { return root_; }

  NodeId parent(NodeId u) const { return parents_[static_cast<std::size_t>(u)]; }

  std::span<const NodeId> children(NodeId u) const {
    auto b = static_cast<std::size_t>(child_offsets_[static_cast<std::size_t>(u)]);
    auto e = static_cast<std::size_t>(child_offsets_[static_cast<std::size_t>(u) + 1]);
    return {child_ids_.data() + b, e - b};
  }

  int node_degree(NodeId u) const { return static_cast<int>(children(u).size()); }
  bool is_leaf(NodeId u) const { return children(u).empty(); }

  /// Length of the path from u to the root.
  int node_depth(NodeId u) const { return depths_[static_cast<std::size_t>(u)]; }

  /// Maximal node depth.
  int depth() const noexcept { return depth_; }

  /// level(u) = depth(T) - depth(u); level 0 is the deepest stratum.
  int level(NodeId u) const { return depth_ - node_depth(u); }

  const std::vector<NodeId>& parents() const noexcept { return parents_; }

 private:
  Tree() = default;

  std::vector<NodeId> parents_;
  std::vector<std::int32_t> child_offsets_;  // CSR, size n+1
  std::vector<NodeId> child_ids_;
  std::vector<std::int32_t> depths_;
  NodeId root_ = kNoParent;
  std::int32_t depth_ = 0;
};

/// Nodes grouped by level. by_level[d] lists the nodes u with
/// level(u) = d, for d in [0, depth]; by_level[depth] holds only the root.
struct LevelIndex {
  int depth = 0;
  std::vector<std::vector<NodeId>> by_level;

  /// Nodes touched while building the index (exactly n for a valid tree;
  /// lets tests pin the single-pass behaviour).
  std::size_t node_visits = 0;

  std::span<const NodeId> at(int level) const {
    return by_level[static_cast<std::size_t>(level)];
  }
};

Tree build_from_parent_array(const std::vector<NodeId>& parents);

/// Buckets nodes by level in one pass over the tree.
LevelIndex level_index(const Tree& t);

/// deg(T) = max over nodes of the child count.
int degree(const Tree& t);

/// depth(T) = maximal node depth.
int depth(const Tree& t);

/// Nodes without children, ascending by id.
std::vector<NodeId> leaves(const Tree& t);

}  // namespace isoforest
