#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "errors.hpp"
#include "graph.hpp"
#include "subsets.hpp"
#include "vertex_set.hpp"

namespace fcut {

// A set refuting k-cyclicity: nonempty, at most k vertices, not dominating,
// and with an acyclic (open) neighborhood.
struct CyclicWitness {
  VertexSet violating_set;
};

namespace detail {

// Scans subsets in size-then-value order; assumes g connected and 1<=k<=n.
inline std::optional<CyclicWitness> cyclic_witness_scan(const Graph& g, int k) {
  int n = g.order();
  auto rows = adjacency_masks(g);
  uint64_t full = universe_mask(n);
  std::optional<CyclicWitness> w;
  for (int size = 1; size <= k && !w; ++size) {
    for_each_subset_of_size(n, size, [&](uint64_t mask) {
      uint64_t nb = neighborhood_mask(rows, mask);
      if ((full & ~(mask | nb)) == 0) return true;  // dominating
      if (!induced_is_forest(g, VertexSet::from_mask(n, nb))) return true;
      w = CyclicWitness{VertexSet::from_mask(n, mask)};
      return false;
    });
  }
  return w;
}

}  // namespace detail

// First witness refuting k-cyclicity, in size-then-value order, or nullopt
// when G is k-cyclic: every nonempty set of at most k vertices either
// dominates G or has a cycle in its neighborhood.
inline std::optional<CyclicWitness> cyclic_witness(const Graph& g, int k) {
  int n = g.order();
  if (k < 1) throw Error(Errc::bad_parameter, "cyclicity parameter must be at least 1, got " + std::to_string(k));
  if (k > n)
    throw Error(Errc::bad_parameter,
                "cyclicity parameter " + std::to_string(k) + " exceeds order " + std::to_string(n));
  if (!is_connected(g)) throw Error(Errc::disconnected_input, "cyclicity is defined for connected graphs");
  return detail::cyclic_witness_scan(g, k);
}

inline bool is_k_cyclic(const Graph& g, int k) { return !cyclic_witness(g, k).has_value(); }

inline bool cyclic_witness_is_valid(const Graph& g, int k, const CyclicWitness& w) {
  const VertexSet& s = w.violating_set;
  if (s.universe() != g.order()) return false;
  if (s.empty() || s.count() > k) return false;
  if (is_dominating(g, s)) return false;
  return induced_is_forest(g, open_neighborhood(g, s));
}

// A connected graph has a forest cut iff it fails to be (ceil(n/2)-1)-cyclic:
// the smaller side A of a forest cut is a non-dominating set with forest
// neighborhood and fewer than n/2 vertices, and conversely N(A) of any
// witness is a forest cut. Orders 1 and 2 leave no room for a witness.
inline bool forest_cut_exists_via_cyclic(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::disconnected_input, "cut search requires a connected graph");
  int k = (g.order() + 1) / 2 - 1;
  if (k < 1) return false;
  return detail::cyclic_witness_scan(g, k).has_value();
}

}  // namespace fcut
