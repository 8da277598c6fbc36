#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isoforest/tree.hpp"

namespace isoforest {

using Color = std::uint64_t;

/// Counters written by the deciders, mainly so tests can pin the early
/// exits (e.g. no level is processed when the depths differ).
struct DeciderStats {
  std::size_t levels_processed = 0;
};

/// Prime-multiplication variant of AHU. Nodes are coloured level by level
/// with primes; a node's children multiset is fingerprinted as the product
/// of the children's prime colours, so equal multisets get equal products
/// by unique factorisation. Linear time, shares nothing between calls.
bool primes_ahu(const Tree& t1, const Tree& t2, DeciderStats* stats = nullptr);

/// Idealised AHU: colours are small integers handed out per distinct
/// children-colour multiset (keyed by the sorted colour list), leaves get
/// 0. Reference implementation of the colouring principle.
bool ideal_ahu(const Tree& t1, const Tree& t2, DeciderStats* stats = nullptr);

/// The 1974 formulation: per level, build for each nonleaf the tuple of
/// its children's integers (nondecreasing by construction), radix-sort the
/// tuple sequences of both trees lexicographically, halt on mismatch, and
/// renumber distinct tuples 1,2,... with leaves kept at 0.
bool original_ahu(const Tree& t1, const Tree& t2, DeciderStats* stats = nullptr);

/// Lexicographic radix sort of variable-length tuples; a shorter tuple
/// precedes its extensions. Stable, O(total components + max_value).
/// Components must lie in [0, max_value].
std::vector<std::vector<std::uint32_t>> radix_sort_tuples(
    const std::vector<std::vector<std::uint32_t>>& tuples,
    std::uint32_t max_value);

/// Multiset equality by pigeonhole counting: one bucket per palette entry,
/// reached through a colour -> index map. O(#entries + #palette). Every
/// colour in c1/c2 must appear in palette (throws unknown_color).
bool compare_level_multisets(std::span<const Color> c1,
                             std::span<const Color> c2,
                             std::span<const Color> palette);

/// Full prime colouring of a single tree (the i in {1} run of the prime
/// decider), kept for width computation and debugging.
struct ColorAssignment {
  int depth = 0;

  /// Prime colour per node id.
  std::vector<Color> color;

  /// Distinct colours actually used at each level, ascending.
  std::vector<std::vector<Color>> level_palette;
};

ColorAssignment level_colors(const Tree& t);

/// width(T): max over levels of the number of distinct colour classes at
/// that level. This is the decider's prime budget.
int width(const Tree& t);

}  // namespace isoforest
