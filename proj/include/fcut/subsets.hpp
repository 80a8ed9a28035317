#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace fcut {

// Exhaustive subset search works on single-word masks; graphs above this
// order must go through the catalog/scan pipeline in smaller pieces.
inline constexpr int kMaxSubsetSearchOrder = 64;

inline std::vector<uint64_t> adjacency_masks(const Graph& g) {
  if (g.order() > kMaxSubsetSearchOrder)
    throw Error(Errc::order_above_cap,
                "subset search supports order <= " + std::to_string(kMaxSubsetSearchOrder) + ", got " +
                    std::to_string(g.order()));
  std::vector<uint64_t> rows(g.order());
  for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v).as_mask();
  return rows;
}

inline uint64_t universe_mask(int n) {
  assert(n >= 0 && n <= 64);
  return n == 64 ? ~0ULL : (1ULL << n) - 1;
}

// Gosper's hack: next mask with the same popcount, in increasing value.
// Returns 0 once the k-subsets of {0..n-1} are exhausted.
inline uint64_t next_same_size_mask(uint64_t mask, int n) {
  uint64_t c = mask & -mask;
  uint64_t r = mask + c;
  uint64_t next = (((r ^ mask) >> 2) / c) | r;
  if (n < 64 && next >= (1ULL << n)) return 0;
  return next;
}

// Visits all k-subsets of {0..n-1} in increasing mask value. The visitor may
// return false to stop early; for_each_subset_of_size returns false in that
// case and true when the enumeration ran to the end.
template <typename F>
bool for_each_subset_of_size(int n, int k, F&& visit) {
  assert(0 <= k && k <= n && n <= 64);
  if (k == 0) return visit(uint64_t{0});
  uint64_t mask = (1ULL << k) - 1;
  while (mask) {
    if (!visit(mask)) return false;
    mask = next_same_size_mask(mask, n);
  }
  return true;
}

// Neighborhood of a set, as masks: (U_{v in s} rows[v]) \ s.
inline uint64_t neighborhood_mask(const std::vector<uint64_t>& rows, uint64_t s) {
  uint64_t nb = 0;
  for (uint64_t rest = s; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    nb |= rows[v];
  }
  return nb & ~s;
}

// Whether `s` induces a connected subgraph (the empty set is not connected).
inline bool mask_connected(const std::vector<uint64_t>& rows, uint64_t s) {
  if (!s) return false;
  uint64_t comp = s & -s;
  for (;;) {
    uint64_t grown = comp;
    for (uint64_t rest = comp; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      grown |= rows[v] & s;
    }
    if (grown == comp) return comp == s;
    comp = grown;
  }
}

namespace detail {

template <typename F>
void extend_connected(const std::vector<uint64_t>& rows, uint64_t above, int max_size, uint64_t s, uint64_t ext,
                      uint64_t closed, F& visit) {
  visit(s);
  if (std::popcount(s) == max_size) return;
  uint64_t candidates = ext;
  while (candidates) {
    uint64_t bit = candidates & -candidates;
    candidates &= candidates - 1;
    int u = std::countr_zero(bit);
    // Candidates already popped stay excluded below this branch; they are in
    // `closed`, so the exclusive-neighbor rule cannot re-add them.
    uint64_t ext2 = candidates | (rows[u] & above & ~closed);
    extend_connected(rows, above, max_size, s | bit, ext2, closed | rows[u], visit);
  }
}

}  // namespace detail

// Enumerates every set that induces a connected subgraph and has between 1
// and max_size vertices, each exactly once. Expansion is canonical: a set is
// grown only from its minimum vertex, and only by vertices larger than it
// that are new to the closed neighborhood (the exclusive-neighbor rule), so
// no set is reachable along two different paths. Visit order is depth-first
// by seed; callers needing size or value order must bucket the results.
template <typename F>
void for_each_connected_set(const std::vector<uint64_t>& rows, int max_size, F&& visit) {
  int n = static_cast<int>(rows.size());
  assert(n <= 64);
  if (max_size <= 0) return;
  for (int v = 0; v < n; ++v) {
    uint64_t bit = 1ULL << v;
    uint64_t above = universe_mask(n) & ~((bit << 1) - 1);
    detail::extend_connected(rows, above, max_size, bit, rows[v] & above, rows[v] | bit, visit);
  }
}

// Connected sets of 1..max_size vertices, bucketed by size (index = size)
// and sorted by mask value within each bucket.
inline std::vector<std::vector<uint64_t>> connected_sets_by_size(const std::vector<uint64_t>& rows, int max_size) {
  std::vector<std::vector<uint64_t>> buckets(static_cast<size_t>(std::max(max_size, 0)) + 1);
  for_each_connected_set(rows, max_size, [&](uint64_t s) { buckets[std::popcount(s)].push_back(s); });
  for (auto& b : buckets) std::sort(b.begin(), b.end());
  return buckets;
}

}  // namespace fcut
