#pragma once

#include <string>
#include <string_view>

#include "isoforest/tree.hpp"

namespace isoforest {

// Format A: balanced parentheses, tree := "(" tree* ")", a single node is
// "()". Format B: whitespace-separated parent indices with -1 for the root.

/// Parses a balanced-parenthesis encoding; nodes are numbered in preorder
/// of the string. Throws unbalanced_parens, trailing_garbage, empty_input
/// or parse_error.
Tree parse_parens(std::string_view s);

/// Emits the tree with children in storage order. parse_parens of the
/// result reproduces the same string.
std::string to_parens(const Tree& t);

/// Classic recursive canonical form: canon(u) = "(" + concatenation of the
/// children's canonical strings sorted ascending + ")". Two trees are
/// isomorphic iff their canonical strings are equal; this is the ground
/// truth the fast deciders are tested against. O(n^2 log n) worst case,
/// which is fine for an oracle.
std::string canonical_string(const Tree& t);

/// Parses format B. Throws parse_error on non-integer tokens plus
/// everything build_from_parent_array throws.
Tree parse_parent_array(std::string_view s);

std::string to_parent_array(const Tree& t);

}  // namespace isoforest
