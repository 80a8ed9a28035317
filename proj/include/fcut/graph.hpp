#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace fcut {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices {0..n-1}, n >= 1.
// Adjacency is stored as one VertexSet row per vertex.
class Graph {
 public:
  Graph() = default;

  // Validates every endpoint and rejects loops and duplicate edges
  // (regardless of orientation).
  static Graph from_edges(int order, const std::vector<Edge>& edges) {
    if (order < 1)
      throw Error(Errc::bad_parameter, "graph order must be at least 1, got " + std::to_string(order));
    Graph g;
    g.n_ = order;
    g.rows_.assign(order, VertexSet(order));
    for (auto [u, v] : edges) {
      if (u < 0 || u >= order || v < 0 || v >= order)
        throw Error(Errc::endpoint_out_of_range,
                    "edge {" + std::to_string(u) + "," + std::to_string(v) + "} in graph of order " +
                        std::to_string(order));
      if (u == v) throw Error(Errc::loop_edge, "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      if (g.rows_[u].test(v))
        throw Error(Errc::duplicate_edge, "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      g.rows_[u].set(v);
      g.rows_[v].set(u);
      ++g.m_;
    }
    return g;
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].count(); }

  int min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  bool is_complete() const { return static_cast<long long>(m_) * 2 == static_cast<long long>(n_) * (n_ - 1); }

  bool is_regular(int d) const {
    for (int v = 0; v < n_; ++v)
      if (degree(v) != d) return false;
    return true;
  }

  VertexSet vertex_set() const { return VertexSet::full(n_); }

  // Edges as {u,v} with u < v, sorted lexicographically.
  std::vector<Edge> edge_list() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v)) out.emplace_back(u, v);
    return out;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> rows_;
};

// Union of neighborhoods of s, minus s itself: N(s) = (U_{v in s} N(v)) \ s.
inline VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet nb(g.order());
  for (int v = s.first(); v >= 0; v = s.next(v)) nb |= g.neighbors(v);
  nb -= s;
  return nb;
}

// s dominates iff s together with its neighborhood covers every vertex.
inline bool is_dominating(const Graph& g, const VertexSet& s) {
  VertexSet cover = s;
  for (int v = s.first(); v >= 0; v = s.next(v)) cover |= g.neighbors(v);
  return cover.count() == g.order();
}

// Component of `region` (induced subgraph) containing `start`.
inline VertexSet component_of(const Graph& g, const VertexSet& region, int start) {
  assert(region.test(start));
  VertexSet comp(g.order());
  comp.set(start);
  VertexSet frontier = comp;
  while (frontier.any()) {
    VertexSet grown(g.order());
    for (int v = frontier.first(); v >= 0; v = frontier.next(v)) grown |= g.neighbors(v);
    grown &= region;
    grown -= comp;
    comp |= grown;
    frontier = grown;
  }
  return comp;
}

// Components of the subgraph induced by `region`, ordered by smallest member.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& region) {
  std::vector<VertexSet> comps;
  VertexSet left = region;
  for (int v = left.first(); v >= 0; v = left.first()) {
    VertexSet comp = component_of(g, left, v);
    left -= comp;
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline std::vector<VertexSet> components(const Graph& g) { return components_within(g, VertexSet::full(g.order())); }

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return component_of(g, VertexSet::full(g.order()), 0).count() == g.order();
}

inline int induced_edge_count(const Graph& g, const VertexSet& s) {
  int twice = 0;
  for (int v = s.first(); v >= 0; v = s.next(v)) twice += (g.neighbors(v) & s).count();
  return twice / 2;
}

inline bool induced_is_independent(const Graph& g, const VertexSet& s) {
  for (int v = s.first(); v >= 0; v = s.next(v))
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

// Acyclicity of the induced subgraph: edges == vertices - components.
inline bool induced_is_forest(const Graph& g, const VertexSet& s) {
  int k = s.count();
  if (k <= 1) return true;
  int e = induced_edge_count(g, s);
  if (e >= k) return false;  // a forest on k vertices has at most k-1 edges
  return e == k - static_cast<int>(components_within(g, s).size());
}

struct DegreeHistogram {
  std::map<int, int> counts;  // degree -> number of vertices

  long long vertex_total() const {
    long long t = 0;
    for (auto [d, c] : counts) t += c;
    return t;
  }

  long long degree_total() const {
    long long t = 0;
    for (auto [d, c] : counts) t += static_cast<long long>(d) * c;
    return t;
  }
};

inline DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  for (int v = 0; v < g.order(); ++v) ++h.counts[g.degree(v)];
  return h;
}

inline bool has_universal_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) return true;
  return false;
}

inline int universal_vertex_count(const Graph& g) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) ++c;
  return c;
}

// Recognizes the family built from a triangle by attaching s extra vertices,
// each adjacent to exactly the three triangle vertices. K4 qualifies with
// s = 1; otherwise the triangle vertices are the universal ones and every
// remaining vertex must have degree exactly 3 into the triangle.
// Returns s, or nullopt if the graph is not of this shape.
inline std::optional<int> is_k_triangle(const Graph& g) {
  int n = g.order();
  if (n == 4 && g.is_complete()) return 1;
  if (n < 4) return std::nullopt;
  VertexSet tri(n);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) tri.set(v);
  if (tri.count() != 3) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (tri.test(v)) continue;
    if (g.degree(v) != 3) return std::nullopt;
    if (!g.neighbors(v).is_subset_of(tri)) return std::nullopt;
  }
  return n - 3;
}

}  // namespace fcut
