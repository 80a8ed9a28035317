#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "subsets.hpp"
#include "vertex_set.hpp"

namespace fcut {

enum class CutKind { unconstrained, forest, independent };

inline const char* cut_kind_name(CutKind k) {
  switch (k) {
    case CutKind::unconstrained: return "unconstrained";
    case CutKind::forest: return "forest";
    case CutKind::independent: return "independent";
  }
  return "?";
}

// A separator together with one side it separates: removing `cut` leaves
// `side` as a union of components, with at least one vertex elsewhere.
struct CutWitness {
  CutKind kind = CutKind::unconstrained;
  VertexSet cut;
  VertexSet side;
};

// s is a vertex cut iff G - s has at least two components. For a connected
// graph this matches the usual definition; vertices of a complete graph
// never form a cut.
inline bool is_cut(const Graph& g, const VertexSet& s) {
  VertexSet rest = VertexSet::full(g.order()) - s;
  return components_within(g, rest).size() >= 2;
}

// Checks a witness against the graph it claims to describe, independently of
// how it was found: the cut must disconnect, the side must be a nonempty
// union of components of G - cut that leaves something over, and the cut
// must satisfy its structural constraint.
inline bool witness_is_valid(const Graph& g, const CutWitness& w) {
  int n = g.order();
  if (w.cut.universe() != n || w.side.universe() != n) return false;
  if (w.cut.empty() || w.side.empty()) return false;
  if (w.cut.intersects(w.side)) return false;
  VertexSet rest = VertexSet::full(n) - w.cut;
  if ((rest - w.side).empty()) return false;
  // No edge may leave `side` except into the cut.
  if (!(open_neighborhood(g, w.side) - w.cut).empty()) return false;
  switch (w.kind) {
    case CutKind::unconstrained: break;
    case CutKind::forest:
      if (!induced_is_forest(g, w.cut)) return false;
      break;
    case CutKind::independent:
      if (induced_edge_count(g, w.cut) != 0) return false;
      break;
  }
  return is_cut(g, w.cut);
}

namespace detail {

// Unit-capacity max flow on the standard vertex-split network: vertex v
// becomes arc 2v -> 2v+1, edge {u,v} becomes arcs u_out -> v_in both ways.
// The value of a max s_out -> t_in flow is the number of internally disjoint
// s-t paths (Menger).
class VertexFlowNetwork {
 public:
  explicit VertexFlowNetwork(const Graph& g) : n_(g.order()), head_(2 * n_, -1) {
    for (int v = 0; v < n_; ++v) add_pair(in(v), out(v));
    for (auto [u, v] : g.edge_list()) {
      add_pair(out(u), in(v));
      add_pair(out(v), in(u));
    }
  }

  // Max flow from s_out to t_in; stops once `cap` augmenting paths are found.
  int flow(int s, int t, int cap) {
    for (auto& c : residual_) c.cur = c.initial;
    int total = 0;
    while (total < cap && augment(out(s), in(t))) ++total;
    return total;
  }

 private:
  struct Arc {
    int to;
    int next;
  };
  struct Residual {
    int8_t initial;
    int8_t cur;
  };

  int in(int v) const { return 2 * v; }
  int out(int v) const { return 2 * v + 1; }

  void add_pair(int a, int b) {
    add_arc(a, b, 1);
    add_arc(b, a, 0);
  }

  void add_arc(int a, int b, int8_t c) {
    arcs_.push_back({b, head_[a]});
    head_[a] = static_cast<int>(arcs_.size()) - 1;
    residual_.push_back({c, c});
  }

  bool augment(int s, int t) {
    std::vector<int> via(2 * n_, -1);  // arc used to reach each node
    std::vector<char> seen(2 * n_, 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty() && !seen[t]) {
      int a = q.front();
      q.pop();
      for (int e = head_[a]; e >= 0; e = arcs_[e].next) {
        int b = arcs_[e].to;
        if (seen[b] || residual_[e].cur == 0) continue;
        seen[b] = 1;
        via[b] = e;
        q.push(b);
      }
    }
    if (!seen[t]) return false;
    for (int b = t; b != s;) {
      int e = via[b];
      residual_[e].cur -= 1;
      residual_[e ^ 1].cur += 1;  // arcs are added in forward/backward pairs
      b = arcs_[e ^ 1].to;
    }
    return true;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<Residual> residual_;
};

}  // namespace detail

// Connectivity of G in the Menger sense: the minimum number of vertices
// whose removal disconnects G or reduces it to a single vertex. Complete
// graphs give n-1, disconnected graphs 0. The global value is the minimum
// over flows from a fixed minimum-degree vertex v0 to each of its
// non-neighbors and between non-adjacent pairs of its neighbors; any minimum
// cut misses v0 or a pair of its neighbors, so these pairs suffice.
inline int vertex_connectivity(const Graph& g) {
  int n = g.order();
  if (n == 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  int v0 = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(v0)) v0 = v;
  int best = g.degree(v0);
  detail::VertexFlowNetwork net(g);
  for (int u = 0; u < n; ++u) {
    if (u == v0 || g.adjacent(v0, u)) continue;
    best = std::min(best, net.flow(v0, u, best));
    if (best == 0) return 0;  // cannot happen for connected input
  }
  auto nb = g.neighbors(v0).members();
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j) {
      if (g.adjacent(nb[i], nb[j])) continue;
      best = std::min(best, net.flow(nb[i], nb[j], best));
    }
  return best;
}

// Reference implementation by subset enumeration, for cross-checking: the
// smallest k such that some k-subset disconnects G. Intended for small
// graphs; cost grows as C(n,k).
inline int vertex_connectivity_bruteforce(const Graph& g) {
  int n = g.order();
  if (n == 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  adjacency_masks(g);  // enforces the order cap
  for (int k = 1; k <= n - 2; ++k) {
    bool found = false;
    for_each_subset_of_size(n, k, [&](uint64_t mask) {
      if (is_cut(g, VertexSet::from_mask(n, mask))) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return k;
  }
  return n - 1;  // unreachable for a non-complete graph
}

namespace detail {

inline bool mask_induces_forest(const Graph& g, uint64_t mask) {
  return induced_is_forest(g, VertexSet::from_mask(g.order(), mask));
}

inline bool mask_induces_independent(const std::vector<uint64_t>& rows, uint64_t mask) {
  for (uint64_t rest = mask; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (rows[v] & mask) return false;
  }
  return true;
}

// Search kernel shared by the constrained cut finders. Enumerates connected
// candidate sides A by size, then mask value; the first A whose closed
// neighborhood misses some vertex and whose boundary N(A) satisfies the
// constraint yields the witness (cut = N(A), side = A). One side of any cut
// has fewer than n/2 vertices and may be taken connected, so sides up to
// ceil(n/2) - 1 vertices are exhaustive.
inline std::optional<CutWitness> find_constrained_cut(const Graph& g, CutKind kind) {
  int n = g.order();
  if (!is_connected(g)) throw Error(Errc::disconnected_input, "cut search requires a connected graph");
  if (g.is_complete()) return std::nullopt;
  auto rows = adjacency_masks(g);

  if (kind == CutKind::forest) {
    // Any cut of at most 2 vertices induces a forest, so low connectivity
    // settles the question with a minimum cut.
    int kappa = vertex_connectivity(g);
    if (kappa <= 2) {
      std::optional<CutWitness> w;
      for (int k = 1; k <= 2 && !w; ++k) {
        for_each_subset_of_size(n, k, [&](uint64_t mask) {
          VertexSet cut = VertexSet::from_mask(n, mask);
          VertexSet rest = VertexSet::full(n) - cut;
          auto comps = components_within(g, rest);
          if (comps.size() >= 2) {
            w = CutWitness{CutKind::forest, cut, comps[0]};
            return false;
          }
          return true;
        });
      }
      return w;  // kappa <= 2 guarantees a cut of that size exists
    }
  }

  int max_side = (n + 1) / 2 - 1;
  uint64_t full = universe_mask(n);
  auto buckets = connected_sets_by_size(rows, max_side);
  for (int size = 1; size <= max_side; ++size) {
    for (uint64_t side : buckets[size]) {
      uint64_t boundary = neighborhood_mask(rows, side);
      if ((full & ~(side | boundary)) == 0) continue;  // closed neighborhood covers G
      bool ok = kind == CutKind::forest ? mask_induces_forest(g, boundary)
                                        : mask_induces_independent(rows, boundary);
      if (ok)
        return CutWitness{kind, VertexSet::from_mask(n, boundary), VertexSet::from_mask(n, side)};
    }
  }
  return std::nullopt;
}

// Reference search over raw subsets S in size-then-value order: the first S
// that satisfies the constraint and disconnects G. The returned side is the
// component of G - S holding the smallest leftover vertex.
inline std::optional<CutWitness> find_constrained_cut_bruteforce(const Graph& g, CutKind kind, int order_cap) {
  int n = g.order();
  if (!is_connected(g)) throw Error(Errc::disconnected_input, "cut search requires a connected graph");
  if (n > order_cap)
    throw Error(Errc::order_above_cap,
                "brute-force cut search capped at order " + std::to_string(order_cap) + ", got " + std::to_string(n));
  auto rows = adjacency_masks(g);
  std::optional<CutWitness> w;
  for (int k = 1; k <= n - 2 && !w; ++k) {
    for_each_subset_of_size(n, k, [&](uint64_t mask) {
      bool ok = kind == CutKind::forest ? mask_induces_forest(g, mask) : mask_induces_independent(rows, mask);
      if (!ok) return true;
      VertexSet cut = VertexSet::from_mask(n, mask);
      VertexSet rest = VertexSet::full(n) - cut;
      auto comps = components_within(g, rest);
      if (comps.size() < 2) return true;
      w = CutWitness{kind, cut, comps[0]};
      return false;
    });
  }
  return w;
}

}  // namespace detail

inline constexpr int kDefaultBruteforceOrderCap = 16;

// First forest cut in the canonical search order, if any. A connected graph
// has no forest cut iff it is complete or every separator induces a cycle
// somewhere; the witness side is the connected fragment that certifies the
// separation.
inline std::optional<CutWitness> find_forest_cut(const Graph& g) {
  return detail::find_constrained_cut(g, CutKind::forest);
}

inline std::optional<CutWitness> find_independent_cut(const Graph& g) {
  return detail::find_constrained_cut(g, CutKind::independent);
}

inline std::optional<CutWitness> find_forest_cut_bruteforce(const Graph& g,
                                                            int order_cap = kDefaultBruteforceOrderCap) {
  return detail::find_constrained_cut_bruteforce(g, CutKind::forest, order_cap);
}

inline std::optional<CutWitness> find_independent_cut_bruteforce(const Graph& g,
                                                                 int order_cap = kDefaultBruteforceOrderCap) {
  return detail::find_constrained_cut_bruteforce(g, CutKind::independent, order_cap);
}

}  // namespace fcut
