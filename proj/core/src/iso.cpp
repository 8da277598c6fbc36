#include "isoforest/iso.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "isoforest/error.hpp"
#include "isoforest/primes.hpp"
#include "isoforest/product_tree.hpp"

namespace isoforest {

namespace {

struct MpzHash {
  std::size_t operator()(const BigNat& z) const noexcept {
    const auto* m = z.get_mpz_t();
    const std::size_t limbs = mpz_size(m);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < limbs; ++i) {
      h ^= static_cast<std::uint64_t>(mpz_getlimbn(m, i));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct U128Hash {
  std::size_t operator()(unsigned __int128 x) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    h ^= static_cast<std::uint64_t>(x);
    h *= 1099511628211ull;
    h ^= static_cast<std::uint64_t>(x >> 64);
    h *= 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

// acc *= f with exact 128-bit overflow detection. Whether the accumulation
// ever wraps depends only on the true product (prefix products of factors
// >= 1 never exceed the total), so the outcome is independent of the
// children's storage order.
bool mul128_checked(unsigned __int128& acc, std::uint64_t f) {
  const std::uint64_t lo = static_cast<std::uint64_t>(acc);
  const std::uint64_t hi = static_cast<std::uint64_t>(acc >> 64);
  const unsigned __int128 lo_part = static_cast<unsigned __int128>(lo) * f;
  const unsigned __int128 hi_part = static_cast<unsigned __int128>(hi) * f;
  if (hi_part >> 64) return false;
  const unsigned __int128 carry =
      static_cast<std::uint64_t>(hi_part) + (lo_part >> 64);
  if (carry >> 64) return false;
  acc = (carry << 64) | static_cast<std::uint64_t>(lo_part);
  return true;
}

struct ColorVecHash {
  std::size_t operator()(const std::vector<Color>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (const Color c : v) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Shared per-level colouring state of the prime decider: the class map f
// (seeded with 1 -> 2 so leaves land on the first prime), the prime cursor
// p, and the palette of primes handed out so far this level.
//
// Fingerprints that fit in 128 bits are keyed natively; only genuinely
// long factor lists go through arbitrary precision. The two key spaces are
// disjoint by value, so class identity is unaffected.
struct PrimeColorer {
  using Entry = std::pair<Color, std::uint32_t>;  // colour, palette slot

  SieveState sieve = initial_state();
  std::unordered_map<unsigned __int128, Entry, U128Hash> f_small;
  std::unordered_map<BigNat, Entry, MpzHash> f_big;
  Color p = 2;
  std::vector<Color> palette;
  std::vector<char> used;

  void reset_level() {
    f_small.clear();
    f_big.clear();
    f_small.emplace(1, Entry(2, 0));
    p = 2;
    palette.assign(1, 2);
    used.assign(1, 0);
  }

  Entry fresh_entry() {
    p = next_prime(sieve, p);
    const Entry e(p, static_cast<std::uint32_t>(palette.size()));
    palette.push_back(p);
    used.push_back(0);
    return e;
  }

  Color take(const Entry& e) {
    used[e.second] = 1;
    return e.first;
  }

  Color color_for(unsigned __int128 fingerprint) {
    auto it = f_small.find(fingerprint);
    if (it == f_small.end()) it = f_small.emplace(fingerprint, fresh_entry()).first;
    return take(it->second);
  }

  Color color_for(const BigNat& fingerprint) {
    auto it = f_big.find(fingerprint);
    if (it == f_big.end()) it = f_big.emplace(fingerprint, fresh_entry()).first;
    return take(it->second);
  }

  std::vector<Color> used_palette() const {
    std::vector<Color> out;
    for (std::size_t i = 0; i < palette.size(); ++i)
      if (used[i]) out.push_back(palette[i]);
    return out;
  }
};

// Colours every node of one tree at one level; children live one level
// below, so their colours are already in `colors`.
void color_level(const Tree& t, std::span<const NodeId> level_nodes,
                 PrimeColorer& colorer, std::vector<Color>& colors,
                 std::vector<Color>& level_colors_out,
                 std::vector<std::uint64_t>& child_buf) {
  for (const NodeId u : level_nodes) {
    const auto kids = t.children(u);
    unsigned __int128 acc = 1;
    bool fits = true;
    for (const NodeId c : kids) {
      if (!mul128_checked(acc, colors[static_cast<std::size_t>(c)])) {
        fits = false;
        break;
      }
    }
    Color col;
    if (fits) {
      col = colorer.color_for(acc);
    } else {
      child_buf.clear();
      for (const NodeId c : kids)
        child_buf.push_back(colors[static_cast<std::size_t>(c)]);
      col = colorer.color_for(product(std::span<const std::uint64_t>(child_buf)));
    }
    colors[static_cast<std::size_t>(u)] = col;
    level_colors_out.push_back(col);
  }
}

}  // namespace

bool compare_level_multisets(std::span<const Color> c1,
                             std::span<const Color> c2,
                             std::span<const Color> palette) {
  std::unordered_map<Color, std::size_t> index;
  index.reserve(palette.size());
  for (std::size_t i = 0; i < palette.size(); ++i) index.emplace(palette[i], i);
  const auto slot = [&](Color c) -> std::size_t {
    const auto it = index.find(c);
    if (it == index.end())
      raise(errc::unknown_color, "colour " + std::to_string(c) + " not in palette");
    return it->second;
  };
  std::vector<std::int64_t> buckets(palette.size(), 0);
  for (const Color c : c1) ++buckets[slot(c)];
  for (const Color c : c2) --buckets[slot(c)];
  for (const std::int64_t b : buckets)
    if (b != 0) return false;
  return true;
}

// Compact level buckets for the hot paths: one contiguous node array plus
// offsets, built with two sequential passes.
struct LevelCsr {
  std::vector<std::uint32_t> offsets;  // size depth+2
  std::vector<NodeId> nodes;

  explicit LevelCsr(const Tree& t) {
    const std::size_t n = t.size();
    const auto levels = static_cast<std::size_t>(t.depth()) + 1;
    offsets.assign(levels + 1, 0);
    for (std::size_t u = 0; u < n; ++u)
      ++offsets[static_cast<std::size_t>(t.level(static_cast<NodeId>(u))) + 1];
    for (std::size_t d = 1; d <= levels; ++d) offsets[d] += offsets[d - 1];
    nodes.resize(n);
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t u = 0; u < n; ++u)
      nodes[cursor[static_cast<std::size_t>(t.level(static_cast<NodeId>(u)))]++] =
          static_cast<NodeId>(u);
  }

  std::span<const NodeId> at(int d) const {
    return {nodes.data() + offsets[static_cast<std::size_t>(d)],
            offsets[static_cast<std::size_t>(d) + 1] -
                offsets[static_cast<std::size_t>(d)]};
  }
};

// Prime colours stay below 2^32 for any tree addressable with 32-bit node
// ids: width is capped through the t_width bound well under 2^28, and
// p_n < n (ln n + ln ln n) keeps even that corner below 2^32.
std::uint32_t narrow_color(Color c) {
  assert(c <= 0xffffffffull);
  return static_cast<std::uint32_t>(c);
}

bool primes_ahu(const Tree& t1, const Tree& t2, DeciderStats* stats) {
  if (t1.size() != t2.size()) return false;
  if (t1.depth() != t2.depth()) return false;
  const LevelCsr li1(t1);
  const LevelCsr li2(t2);

  std::vector<std::uint32_t> colors1(t1.size(), 0), colors2(t2.size(), 0);
  std::vector<Color> level1, level2;
  std::vector<std::uint64_t> child_buf;
  PrimeColorer colorer;

  const auto color_side = [&](const Tree& t, const LevelCsr& li, int d,
                              std::vector<std::uint32_t>& colors,
                              std::vector<Color>& out) {
    const PrimeColorer::Entry leaf_entry = colorer.f_small.find(1)->second;
    const auto nodes = li.at(d);
    constexpr std::size_t kPrefetch = 8;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i + kPrefetch < nodes.size()) {
        // Child colours are the one genuinely random access pattern here;
        // fetching them a few nodes ahead hides most of the miss latency
        // on large trees.
        for (const NodeId c : t.children(nodes[i + kPrefetch]))
          __builtin_prefetch(&colors[static_cast<std::size_t>(c)]);
      }
      const NodeId u = nodes[i];
      const auto kids = t.children(u);
      Color col;
      if (kids.empty()) {
        col = colorer.take(leaf_entry);
      } else {
        unsigned __int128 acc = 1;
        bool fits = true;
        for (const NodeId c : kids) {
          if (!mul128_checked(acc, colors[static_cast<std::size_t>(c)])) {
            fits = false;
            break;
          }
        }
        if (fits) {
          col = colorer.color_for(acc);
        } else {
          child_buf.clear();
          for (const NodeId c : kids)
            child_buf.push_back(colors[static_cast<std::size_t>(c)]);
          col = colorer.color_for(product(std::span<const std::uint64_t>(child_buf)));
        }
      }
      colors[static_cast<std::size_t>(u)] = narrow_color(col);
      out.push_back(col);
    }
  };

  for (int d = 0; d <= t1.depth(); ++d) {
    if (stats) ++stats->levels_processed;
    colorer.reset_level();
    level1.clear();
    level2.clear();
    color_side(t1, li1, d, colors1, level1);
    color_side(t2, li2, d, colors2, level2);
    if (!compare_level_multisets(level1, level2, colorer.palette)) return false;
  }
  return true;
}

bool ideal_ahu(const Tree& t1, const Tree& t2, DeciderStats* stats) {
  if (t1.size() != t2.size()) return false;
  if (t1.depth() != t2.depth()) return false;
  const LevelIndex li1 = level_index(t1);
  const LevelIndex li2 = level_index(t2);

  std::vector<Color> colors1(t1.size(), 0), colors2(t2.size(), 0);
  std::vector<Color> level1, level2, key;

  for (int d = 0; d <= t1.depth(); ++d) {
    if (stats) ++stats->levels_processed;
    std::unordered_map<std::vector<Color>, Color, ColorVecHash> f;
    f.emplace(std::vector<Color>{}, 0);
    Color k = 0;
    level1.clear();
    level2.clear();

    const auto run = [&](const Tree& t, std::span<const NodeId> nodes,
                         std::vector<Color>& colors, std::vector<Color>& out) {
      for (const NodeId u : nodes) {
        key.clear();
        for (const NodeId c : t.children(u))
          key.push_back(colors[static_cast<std::size_t>(c)]);
        std::sort(key.begin(), key.end());
        auto it = f.find(key);
        if (it == f.end()) it = f.emplace(key, ++k).first;
        colors[static_cast<std::size_t>(u)] = it->second;
        out.push_back(it->second);
      }
    };
    run(t1, li1.at(d), colors1, level1);
    run(t2, li2.at(d), colors2, level2);

    std::vector<Color> palette(static_cast<std::size_t>(k) + 1);
    std::iota(palette.begin(), palette.end(), Color(0));
    if (!compare_level_multisets(level1, level2, palette)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Original AHU: tuple building and the lexicographic radix sort.

namespace {

// Variable-length tuples stored back to back.
struct TupleArena {
  std::vector<std::uint32_t> values;
  std::vector<std::uint32_t> offsets{0};

  std::size_t count() const { return offsets.size() - 1; }
  std::uint32_t length(std::size_t i) const { return offsets[i + 1] - offsets[i]; }
  // pos is 1-based
  std::uint32_t component(std::size_t i, std::uint32_t pos) const {
    return values[offsets[i] + pos - 1];
  }
  bool equal(std::size_t i, std::size_t j) const {
    const std::uint32_t len = length(i);
    if (len != length(j)) return false;
    return std::equal(values.begin() + offsets[i], values.begin() + offsets[i] + len,
                      values.begin() + offsets[j]);
  }
  bool equal_across(std::size_t i, const TupleArena& other, std::size_t j) const {
    const std::uint32_t len = length(i);
    if (len != other.length(j)) return false;
    return std::equal(values.begin() + offsets[i], values.begin() + offsets[i] + len,
                      other.values.begin() + other.offsets[j]);
  }
  void clear() {
    values.clear();
    offsets.assign(1, 0);
  }
};

// Stable lexicographic order of the arena's tuples (AHU's radix sort for
// strings of varying length). Sorts positions from the longest down to 1;
// tuples of length exactly l enter in front of the queue at stage l, so a
// prefix always precedes its extensions. Only values actually present at a
// position are scanned, which keeps the whole thing
// O(total components + max_value).
std::vector<std::uint32_t> radix_order(const TupleArena& arena,
                                       std::uint32_t max_value) {
  const std::size_t m = arena.count();
  std::vector<std::uint32_t> result;
  if (m == 0) return result;

  std::uint32_t max_len = 0;
  for (std::size_t i = 0; i < m; ++i) max_len = std::max(max_len, arena.length(i));

  // Tuple ids bucketed by length (ascending id within a bucket).
  std::vector<std::uint32_t> len_start(max_len + 2, 0);
  for (std::size_t i = 0; i < m; ++i) ++len_start[arena.length(i) + 1];
  for (std::size_t l = 1; l < len_start.size(); ++l) len_start[l] += len_start[l - 1];
  std::vector<std::uint32_t> by_len(m);
  {
    std::vector<std::uint32_t> cursor(len_start.begin(), len_start.end() - 1);
    for (std::size_t i = 0; i < m; ++i)
      by_len[cursor[arena.length(i)]++] = static_cast<std::uint32_t>(i);
  }

  // For every position, the ascending list of distinct values occurring
  // there; built with one counting sort of all (value, position) pairs.
  std::vector<std::vector<std::uint32_t>> vals_at_pos(max_len + 1);
  {
    const std::size_t total = arena.values.size();
    std::vector<std::size_t> val_start(static_cast<std::size_t>(max_value) + 2, 0);
    for (std::size_t i = 0; i < total; ++i) ++val_start[arena.values[i] + 1];
    for (std::size_t v = 1; v < val_start.size(); ++v) val_start[v] += val_start[v - 1];
    std::vector<std::uint32_t> pos_sorted(total);
    {
      std::vector<std::size_t> cursor(val_start.begin(), val_start.end() - 1);
      for (std::size_t i = 0; i < m; ++i) {
        const std::uint32_t len = arena.length(i);
        for (std::uint32_t pos = 1; pos <= len; ++pos)
          pos_sorted[cursor[arena.component(i, pos)]++] = pos;
      }
    }
    for (std::uint32_t v = 0; v <= max_value; ++v) {
      for (std::size_t idx = val_start[v]; idx < val_start[v + 1]; ++idx) {
        auto& lst = vals_at_pos[pos_sorted[idx]];
        if (lst.empty() || lst.back() != v) lst.push_back(v);
      }
    }
  }

  std::vector<std::uint32_t> queue;      // tuples of length >= l, sorted by suffix
  std::vector<std::uint32_t> in_list, next_queue;
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(max_value) + 1, 0);
  for (std::uint32_t l = max_len; l >= 1; --l) {
    in_list.clear();
    for (std::uint32_t idx = len_start[l]; idx < len_start[l + 1]; ++idx)
      in_list.push_back(by_len[idx]);
    in_list.insert(in_list.end(), queue.begin(), queue.end());

    for (const std::uint32_t t : in_list) ++counts[arena.component(t, l)];
    std::uint32_t run = 0;
    for (const std::uint32_t v : vals_at_pos[l]) {
      const std::uint32_t c = counts[v];
      counts[v] = run;
      run += c;
    }
    next_queue.assign(in_list.size(), 0);
    for (const std::uint32_t t : in_list)
      next_queue[counts[arena.component(t, l)]++] = t;
    for (const std::uint32_t v : vals_at_pos[l]) counts[v] = 0;
    queue.swap(next_queue);
  }

  // Empty tuples precede everything.
  result.reserve(m);
  for (std::uint32_t idx = len_start[0]; idx < len_start[1]; ++idx)
    result.push_back(by_len[idx]);
  result.insert(result.end(), queue.begin(), queue.end());
  return result;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> radix_sort_tuples(
    const std::vector<std::vector<std::uint32_t>>& tuples,
    std::uint32_t max_value) {
  TupleArena arena;
  for (const auto& t : tuples) {
    for (const std::uint32_t v : t) {
      if (v > max_value)
        raise(errc::domain_error, "tuple component exceeds max_value");
      arena.values.push_back(v);
    }
    arena.offsets.push_back(static_cast<std::uint32_t>(arena.values.size()));
  }
  const std::vector<std::uint32_t> order = radix_order(arena, max_value);
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(tuples.size());
  for (const std::uint32_t i : order) out.push_back(tuples[i]);
  return out;
}

bool original_ahu(const Tree& t1, const Tree& t2, DeciderStats* stats) {
  if (t1.size() != t2.size()) return false;
  const Tree* trees[2] = {&t1, &t2};
  const LevelIndex levels[2] = {level_index(t1), level_index(t2)};
  const int max_depth = std::max(levels[0].depth, levels[1].depth);

  // Step 1: every leaf carries 0; internal nodes are overwritten later.
  std::vector<std::uint32_t> ints[2];
  std::vector<NodeId> lists[2];  // L, sorted by assigned integer
  std::vector<std::int32_t> tuple_of[2];
  for (int s = 0; s < 2; ++s) {
    ints[s].assign(trees[s]->size(), 0);
    const auto bottom = levels[s].at(0);
    lists[s].assign(bottom.begin(), bottom.end());
    tuple_of[s].assign(trees[s]->size(), -1);
  }

  TupleArena arenas[2];
  std::vector<NodeId> owners[2];  // tuple index -> node
  std::vector<std::uint32_t> order[2];
  std::uint32_t prev_distinct = 0;  // distinct tuples one level down

  bool verdict = true;
  for (int d = 1; d <= max_depth && verdict; ++d) {
    if (stats) ++stats->levels_processed;

    // Steps 3-4: scanning L left to right appends each child's integer to
    // its parent's tuple, so components come out nondecreasing.
    for (int s = 0; s < 2; ++s) {
      arenas[s].clear();
      owners[s].clear();
      const Tree& t = *trees[s];
      std::vector<std::uint32_t> lens;
      for (const NodeId u : lists[s]) {
        const NodeId w = t.parent(u);
        if (w == kNoParent) continue;
        auto& slot = tuple_of[s][static_cast<std::size_t>(w)];
        if (slot < 0) {
          slot = static_cast<std::int32_t>(owners[s].size());
          owners[s].push_back(w);
          lens.push_back(0);
        }
        ++lens[static_cast<std::size_t>(slot)];
      }
      arenas[s].offsets.resize(owners[s].size() + 1);
      arenas[s].offsets[0] = 0;
      for (std::size_t i = 0; i < lens.size(); ++i)
        arenas[s].offsets[i + 1] = arenas[s].offsets[i] + lens[i];
      arenas[s].values.resize(arenas[s].offsets.back());
      std::vector<std::uint32_t> cursor(arenas[s].offsets.begin(),
                                        arenas[s].offsets.end() - 1);
      for (const NodeId u : lists[s]) {
        const NodeId w = t.parent(u);
        if (w == kNoParent) continue;
        const auto slot = static_cast<std::size_t>(tuple_of[s][static_cast<std::size_t>(w)]);
        arenas[s].values[cursor[slot]++] = ints[s][static_cast<std::size_t>(u)];
      }
    }

    // Step 5: lexicographic radix sort of both tuple sequences.
    const std::uint32_t max_value = prev_distinct + 1;
    for (int s = 0; s < 2; ++s) order[s] = radix_order(arenas[s], max_value);

    // Step 6: halt unless the sorted sequences are identical, then number
    // distinct tuples 1, 2, ... and rebuild L with the level's leaves in
    // front (they keep integer 0, so L stays sorted).
    if (order[0].size() != order[1].size()) {
      verdict = false;
      break;
    }
    for (std::size_t i = 0; i < order[0].size(); ++i) {
      if (!arenas[0].equal_across(order[0][i], arenas[1], order[1][i])) {
        verdict = false;
        break;
      }
    }
    if (!verdict) break;

    for (int s = 0; s < 2; ++s) {
      std::uint32_t next_int = 0;
      for (std::size_t i = 0; i < order[s].size(); ++i) {
        if (i == 0 || !arenas[s].equal(order[s][i], order[s][i - 1])) ++next_int;
        ints[s][static_cast<std::size_t>(owners[s][order[s][i]])] = next_int;
      }
      if (s == 0) prev_distinct = next_int;

      lists[s].clear();
      if (d <= levels[s].depth) {
        for (const NodeId u : levels[s].at(d))
          if (trees[s]->is_leaf(u)) lists[s].push_back(u);
      }
      for (const std::uint32_t i : order[s])
        lists[s].push_back(owners[s][i]);

      for (const NodeId w : owners[s]) tuple_of[s][static_cast<std::size_t>(w)] = -1;
    }
  }

  // Step 7.
  return verdict && ints[0][static_cast<std::size_t>(t1.root())] ==
                        ints[1][static_cast<std::size_t>(t2.root())];
}

ColorAssignment level_colors(const Tree& t) {
  const LevelIndex li = level_index(t);
  ColorAssignment out;
  out.depth = li.depth;
  out.color.assign(t.size(), 0);
  out.level_palette.resize(static_cast<std::size_t>(li.depth) + 1);

  PrimeColorer colorer;
  std::vector<Color> level;
  std::vector<std::uint64_t> child_buf;
  for (int d = 0; d <= li.depth; ++d) {
    colorer.reset_level();
    level.clear();
    color_level(t, li.at(d), colorer, out.color, level, child_buf);
    out.level_palette[static_cast<std::size_t>(d)] = colorer.used_palette();
  }
  return out;
}

int width(const Tree& t) {
  const ColorAssignment colors = level_colors(t);
  std::size_t w = 0;
  for (const auto& palette : colors.level_palette) w = std::max(w, palette.size());
  return static_cast<int>(w);
}

}  // namespace isoforest
