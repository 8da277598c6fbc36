#include "isoforest/codec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "isoforest/error.hpp"

namespace isoforest {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

Tree parse_parens(std::string_view s) {
  std::vector<NodeId> parents;
  std::vector<NodeId> stack;
  bool done = false;  // a complete tree has been closed
  for (char c : s) {
    if (is_space(c)) continue;
    if (done) raise(errc::trailing_garbage, "content after the tree closes");
    switch (c) {
      case '(': {
        const NodeId id = static_cast<NodeId>(parents.size());
        parents.push_back(stack.empty() ? kNoParent : stack.back());
        stack.push_back(id);
        break;
      }
      case ')':
        if (stack.empty()) raise(errc::unbalanced_parens, "unmatched ')'");
        stack.pop_back();
        if (stack.empty()) done = true;
        break;
      default:
        raise(errc::parse_error, std::string("unexpected character '") + c + "'");
    }
  }
  if (!stack.empty()) raise(errc::unbalanced_parens, "unclosed '('");
  if (parents.empty()) raise(errc::empty_input, "no tree in input");
  return Tree::from_parents(parents);
}

std::string to_parens(const Tree& t) {
  std::string out;
  out.reserve(2 * t.size());
  // Explicit stack; path-shaped trees are too deep for recursion.
  std::vector<std::pair<NodeId, std::size_t>> stack;
  stack.emplace_back(t.root(), 0);
  out.push_back('(');
  while (!stack.empty()) {
    auto& [u, next_child] = stack.back();
    const auto kids = t.children(u);
    if (next_child < kids.size()) {
      const NodeId c = kids[next_child++];
      out.push_back('(');
      stack.emplace_back(c, 0);
    } else {
      out.push_back(')');
      stack.pop_back();
    }
  }
  return out;
}

std::string canonical_string(const Tree& t) {
  const LevelIndex levels = level_index(t);
  std::vector<std::string> canon(t.size());
  // Bottom-up by level; children sit exactly one level below their parent,
  // so their strings are ready and can be consumed by move.
  for (int d = 0; d <= levels.depth; ++d) {
    for (const NodeId u : levels.at(d)) {
      const auto kids = t.children(u);
      if (kids.empty()) {
        canon[static_cast<std::size_t>(u)] = "()";
        continue;
      }
      std::vector<std::string> parts;
      parts.reserve(kids.size());
      std::size_t total = 2;
      for (const NodeId c : kids) {
        total += canon[static_cast<std::size_t>(c)].size();
        parts.push_back(std::move(canon[static_cast<std::size_t>(c)]));
      }
      std::sort(parts.begin(), parts.end());
      std::string s;
      s.reserve(total);
      s.push_back('(');
      for (const auto& p : parts) s += p;
      s.push_back(')');
      canon[static_cast<std::size_t>(u)] = std::move(s);
    }
  }
  return canon[static_cast<std::size_t>(t.root())];
}

Tree parse_parent_array(std::string_view s) {
  std::vector<NodeId> parents;
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    while (i < n && is_space(s[i])) ++i;
    if (i >= n) break;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + n, value);
    if (ec != std::errc() || (ptr != s.data() + n && !is_space(*ptr)))
      raise(errc::parse_error,
            "expected integer at position " + std::to_string(i));
    if (value < kNoParent || value > static_cast<long long>(s.size()))
      raise(errc::index_out_of_range, "parent index " + std::to_string(value));
    parents.push_back(static_cast<NodeId>(value));
    i = static_cast<std::size_t>(ptr - s.data());
  }
  if (parents.empty()) raise(errc::empty_input, "no integers in input");
  return Tree::from_parents(parents);
}

std::string to_parent_array(const Tree& t) {
  std::string out;
  for (std::size_t u = 0; u < t.size(); ++u) {
    if (u) out.push_back(' ');
    out += std::to_string(t.parents()[u]);
  }
  return out;
}

}  // namespace isoforest
