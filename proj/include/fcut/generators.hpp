#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuts.hpp"
#include "cyclic.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace fcut {

inline Graph complete(int n) {
  if (n < 1) throw Error(Errc::bad_parameter, "complete graph needs n >= 1, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline Graph cycle(int n) {
  if (n < 3) throw Error(Errc::bad_parameter, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph path(int n) {
  if (n < 1) throw Error(Errc::bad_parameter, "path needs n >= 1, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw Error(Errc::bad_parameter, "complete bipartite needs both parts nonempty");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edges(a + b, edges);
}

// i ~ j iff the cyclic distance |i-j| mod n is one of the jumps; the jump
// n/2 (even n) contributes one edge per pair, not two.
inline Graph circulant(int n, const std::vector<int>& jumps) {
  if (n < 3) throw Error(Errc::bad_parameter, "circulant needs n >= 3, got " + std::to_string(n));
  if (jumps.empty()) throw Error(Errc::bad_parameter, "circulant needs at least one jump");
  std::vector<bool> seen(n / 2 + 1, false);
  for (int j : jumps) {
    if (j < 1 || j > n / 2)
      throw Error(Errc::bad_parameter,
                  "circulant jump " + std::to_string(j) + " outside 1..=" + std::to_string(n / 2));
    if (seen[j]) throw Error(Errc::bad_parameter, "duplicate circulant jump " + std::to_string(j));
    seen[j] = true;
  }
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int j : jumps) {
      int u = (v + j) % n;
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  // the half jump n/2 reaches each partner from both ends; keep one copy
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(n, edges);
}

inline Graph octahedron() { return circulant(6, {1, 2}); }

// Triangle plus s extra vertices, each adjacent to all three corners.
inline Graph k_triangle(int s) {
  if (s < 1) throw Error(Errc::bad_parameter, "k-triangle needs s >= 1, got " + std::to_string(s));
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
  for (int v = 3; v < s + 3; ++v)
    for (int c = 0; c < 3; ++c) edges.emplace_back(c, v);
  return Graph::from_edges(s + 3, edges);
}

inline Graph k5_minus_e() {
  std::vector<Edge> edges;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      if (!(u == 3 && v == 4)) edges.emplace_back(u, v);
  return Graph::from_edges(5, edges);
}

inline Graph petersen() {
  std::vector<Edge> edges;
  for (int v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);          // outer C5
    edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    edges.emplace_back(v, 5 + v);                // spokes
  }
  std::sort(edges.begin(), edges.end());
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(10, edges);
}

// Prism over a k-cycle: two concentric k-cycles joined by rungs (CL_k).
inline Graph circular_ladder(int k) {
  if (k < 3) throw Error(Errc::bad_parameter, "circular ladder needs k >= 3, got " + std::to_string(k));
  std::vector<Edge> edges;
  for (int v = 0; v < k; ++v) {
    edges.emplace_back(v, (v + 1) % k);
    edges.emplace_back(k + v, k + (v + 1) % k);
    edges.emplace_back(v, k + v);
  }
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(2 * k, edges);
}

// r x c grid with king moves: orthogonal plus both diagonals per cell.
inline Graph king_grid(int r, int c) {
  if (r < 1 || c < 1) throw Error(Errc::bad_parameter, "king grid needs positive dimensions");
  auto id = [c](int i, int j) { return i * c + j; };
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      if (j + 1 < c) edges.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < r) edges.emplace_back(id(i, j), id(i + 1, j));
      if (i + 1 < r && j + 1 < c) edges.emplace_back(id(i, j), id(i + 1, j + 1));
      if (i + 1 < r && j > 0) edges.emplace_back(id(i, j), id(i + 1, j - 1));
    }
  return Graph::from_edges(r * c, edges);
}

enum class BlowupPolicy { one_external, all_external, three_external, four_external };

inline const char* blowup_policy_name(BlowupPolicy p) {
  switch (p) {
    case BlowupPolicy::one_external: return "one-external";
    case BlowupPolicy::all_external: return "all-external";
    case BlowupPolicy::three_external: return "three-external";
    case BlowupPolicy::four_external: return "four-external";
  }
  return "?";
}

namespace detail {

inline void require_regular(const Graph& base, int d, const char* what) {
  if (!base.is_regular(d))
    throw Error(Errc::regularity_mismatch, std::string(what) + " requires a " + std::to_string(d) + "-regular base");
}

// Shared blowup frame: base vertex v becomes block {Bv..Bv+B-1} carrying
// `internal` edges; base edge {u,v} becomes one external edge whose endpoint
// in block u is port[r], r the rank of v among u's neighbors in ascending
// order. Distinct ranks hit distinct ports, so every base edge gets its own
// attachment vertex.
inline Graph blowup(const Graph& base, int block, const std::vector<Edge>& internal, const std::vector<int>& ports) {
  int k = base.order();
  std::vector<Edge> edges;
  for (int v = 0; v < k; ++v)
    for (auto [a, b] : internal) edges.emplace_back(block * v + a, block * v + b);
  std::vector<std::vector<int>> rank(k);
  for (int v = 0; v < k; ++v) rank[v] = base.neighbors(v).members();  // ascending
  auto port_of = [&](int v, int nb) {
    auto& r = rank[v];
    int idx = static_cast<int>(std::lower_bound(r.begin(), r.end(), nb) - r.begin());
    return block * v + ports[idx];
  };
  for (auto [u, v] : base.edge_list()) edges.emplace_back(port_of(u, v), port_of(v, u));
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(block * k, edges);
}

}  // namespace detail

// Each base vertex becomes a K4 and each base edge runs between dedicated
// K4 vertices. one_external (3-regular base) uses ports 0,1,2 and leaves
// block vertex 3 at degree 3; all_external (4-regular base) uses all four.
inline Graph k4_blowup(const Graph& base, BlowupPolicy policy = BlowupPolicy::one_external) {
  static const std::vector<Edge> k4_edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  switch (policy) {
    case BlowupPolicy::one_external:
      detail::require_regular(base, 3, "k4-blowup with one-external");
      return detail::blowup(base, 4, k4_edges, {0, 1, 2});
    case BlowupPolicy::all_external:
      detail::require_regular(base, 4, "k4-blowup with all-external");
      return detail::blowup(base, 4, k4_edges, {0, 1, 2, 3});
    default:
      throw Error(Errc::bad_parameter, "k4-blowup accepts one-external or all-external");
  }
}

// Octahedral variant. three_external (3-regular base) attaches to the facial
// triangle {0,1,2}; four_external (4-regular base) attaches to the equator
// 4-cycle {1,2,4,5}, leaving the antipodal pair {0,3} at degree 4.
inline Graph octa_blowup(const Graph& base, BlowupPolicy policy = BlowupPolicy::three_external) {
  static const std::vector<Edge> octa_edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
                                               {0, 2}, {1, 3}, {2, 4}, {3, 5}, {0, 4}, {1, 5}};
  switch (policy) {
    case BlowupPolicy::three_external:
      detail::require_regular(base, 3, "octa-blowup with three-external");
      return detail::blowup(base, 6, octa_edges, {0, 1, 2});
    case BlowupPolicy::four_external:
      detail::require_regular(base, 4, "octa-blowup with four-external");
      return detail::blowup(base, 6, octa_edges, {1, 2, 4, 5});
    default:
      throw Error(Errc::bad_parameter, "octa-blowup accepts three-external or four-external");
  }
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

namespace detail {

inline Graph verified_base(Graph g, int d, const std::string& name) {
  if (!g.is_regular(d))
    throw Error(Errc::regularity_mismatch, "base " + name + " is not " + std::to_string(d) + "-regular");
  if (vertex_connectivity(g) != d)
    throw Error(Errc::regularity_mismatch, "base " + name + " is not " + std::to_string(d) + "-connected");
  return g;
}

}  // namespace detail

// The shipped 3-regular 3-connected bases; each instance is re-verified.
inline std::vector<NamedGraph> cubic_bases() {
  std::vector<NamedGraph> out;
  out.push_back({"k4", detail::verified_base(complete(4), 3, "k4")});
  out.push_back({"k33", detail::verified_base(complete_bipartite(3, 3), 3, "k33")});
  out.push_back({"cl3", detail::verified_base(circular_ladder(3), 3, "cl3")});
  out.push_back({"cl4", detail::verified_base(circular_ladder(4), 3, "cl4")});
  out.push_back({"petersen", detail::verified_base(petersen(), 3, "petersen")});
  return out;
}

// The shipped 4-regular 4-connected bases: K5 and squared cycles c6..c8.
inline std::vector<NamedGraph> quartic_bases() {
  std::vector<NamedGraph> out;
  out.push_back({"k5", detail::verified_base(complete(5), 4, "k5")});
  for (int n = 6; n <= 8; ++n)
    out.push_back({"c" + std::to_string(n), detail::verified_base(circulant(n, {1, 2}), 4, "c" + std::to_string(n))});
  return out;
}

// Base tokens accepted by the blowup families: k4, k33, cl<k> (k >= 3),
// petersen, k5, and c<n> (n >= 6, the squared cycle circulant(n,{1,2})).
inline NamedGraph resolve_base(const std::string& token) {
  if (token == "k4") return {"k4", detail::verified_base(complete(4), 3, token)};
  if (token == "k33") return {"k33", detail::verified_base(complete_bipartite(3, 3), 3, token)};
  if (token == "petersen") return {"petersen", detail::verified_base(petersen(), 3, token)};
  if (token == "k5") return {"k5", detail::verified_base(complete(5), 4, token)};
  auto numeric_suffix = [&](size_t prefix) -> std::optional<int> {
    if (token.size() <= prefix) return std::nullopt;
    int val = 0;
    for (size_t i = prefix; i < token.size(); ++i) {
      if (token[i] < '0' || token[i] > '9') return std::nullopt;
      val = val * 10 + (token[i] - '0');
      if (val > 1000000) return std::nullopt;
    }
    return val;
  };
  if (token.rfind("cl", 0) == 0) {
    if (auto k = numeric_suffix(2)) {
      if (*k < 3) throw Error(Errc::bad_parameter, "base " + token + ": circular ladder needs k >= 3");
      return {token, detail::verified_base(circular_ladder(*k), 3, token)};
    }
  }
  if (token.rfind("c", 0) == 0) {
    if (auto n = numeric_suffix(1)) {
      if (*n < 6) throw Error(Errc::bad_parameter, "base " + token + ": squared cycle needs n >= 6");
      return {token, detail::verified_base(circulant(*n, {1, 2}), 4, token)};
    }
  }
  throw Error(Errc::unknown_family, "base '" + token + "' (expected k4, k33, cl<k>, petersen, k5, or c<n>)");
}

// Fixed small graphs reconstructed from their published drawings; every one
// is re-certified by tests, never trusted from the edge list alone.
inline Graph fig2_fixture(const std::string& id) {
  auto mk = [](int n, std::vector<Edge> e) {
    for (auto& [a, b] : e)
      if (a > b) std::swap(a, b);
    std::sort(e.begin(), e.end());
    return Graph::from_edges(n, e);
  };
  if (id == "kt3") return k_triangle(3);
  if (id == "octa") return octahedron();
  if (id == "king3x3") return king_grid(3, 3);
  if (id == "g7_16")
    return mk(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}, {3, 0}, {3, 1}, {4, 1}, {4, 0}, {5, 2},
                  {5, 1}, {6, 2}, {6, 0}, {6, 4}});
  if (id == "g8_18a")
    return mk(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7},
                  {4, 6}, {0, 7}, {0, 5}, {2, 7}, {2, 5}, {1, 3}});
  if (id == "c6_plus_two_hubs") {
    std::vector<Edge> e;
    for (int v = 0; v < 6; ++v) e.emplace_back(v, (v + 1) % 6);
    for (int v = 0; v < 6; ++v) e.emplace_back(v, 6);
    for (int v = 0; v < 6; ++v) e.emplace_back(v, 7);
    return mk(8, e);
  }
  throw Error(Errc::unknown_fixture,
              "fixture '" + id + "' (expected kt3, octa, king3x3, g7_16, g8_18a, or c6_plus_two_hubs)");
}

inline const std::vector<std::string>& fig2_fixture_ids() {
  static const std::vector<std::string> ids = {"kt3", "octa", "king3x3", "g7_16", "g8_18a", "c6_plus_two_hubs"};
  return ids;
}

enum class Family {
  complete,
  cycle,
  path,
  circulant,
  petersen,
  octahedron,
  k5_minus_e,
  k_triangle,
  circular_ladder,
  king_grid,
  k4_blowup,
  octa_blowup,
  fig2_fixture,
};

inline Family parse_family(const std::string& token) {
  if (token == "complete") return Family::complete;
  if (token == "cycle") return Family::cycle;
  if (token == "path") return Family::path;
  if (token == "circulant") return Family::circulant;
  if (token == "petersen") return Family::petersen;
  if (token == "octahedron") return Family::octahedron;
  if (token == "k5-minus-e") return Family::k5_minus_e;
  if (token == "k-triangle") return Family::k_triangle;
  if (token == "circular-ladder") return Family::circular_ladder;
  if (token == "king-grid") return Family::king_grid;
  if (token == "k4-blowup") return Family::k4_blowup;
  if (token == "octa-blowup") return Family::octa_blowup;
  if (token == "fig2") return Family::fig2_fixture;
  throw Error(Errc::unknown_family, "family '" + token + "'");
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::circulant: return "circulant";
    case Family::petersen: return "petersen";
    case Family::octahedron: return "octahedron";
    case Family::k5_minus_e: return "k5-minus-e";
    case Family::k_triangle: return "k-triangle";
    case Family::circular_ladder: return "circular-ladder";
    case Family::king_grid: return "king-grid";
    case Family::k4_blowup: return "k4-blowup";
    case Family::octa_blowup: return "octa-blowup";
    case Family::fig2_fixture: return "fig2";
  }
  return "?";
}

// One concrete family instance. Parameter use depends on the family: n for
// complete/cycle/path/circulant, s for k-triangle, k for circular-ladder,
// rows/cols for king-grid, base/policy for the blowups, id for fig2.
struct FamilySpec {
  Family family = Family::complete;
  int n = 0;
  int s = 0;
  int k = 0;
  int rows = 0;
  int cols = 0;
  std::vector<int> jumps;
  std::string base;
  std::optional<BlowupPolicy> policy;
  std::string id;
};

// Claims a family makes about every instance; nullopt means no claim, not
// "unknown and assumed fine". Certification checks exactly the claims.
struct ExpectedProfile {
  long long order = 0;
  long long size = 0;
  std::optional<int> connectivity;
  std::optional<int> cyclicity;
  std::optional<bool> universal;
};

namespace detail {

inline BlowupPolicy pick_policy(const FamilySpec& spec, const Graph& base) {
  if (spec.policy) return *spec.policy;
  bool k4 = spec.family == Family::k4_blowup;
  if (base.is_regular(3)) return k4 ? BlowupPolicy::one_external : BlowupPolicy::three_external;
  if (base.is_regular(4)) return k4 ? BlowupPolicy::all_external : BlowupPolicy::four_external;
  throw Error(Errc::regularity_mismatch, "base is neither 3- nor 4-regular; no default policy");
}

inline bool cubic_policy(BlowupPolicy p) {
  return p == BlowupPolicy::one_external || p == BlowupPolicy::three_external;
}

}  // namespace detail

inline Graph make_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete: return complete(spec.n);
    case Family::cycle: return cycle(spec.n);
    case Family::path: return path(spec.n);
    case Family::circulant: return circulant(spec.n, spec.jumps);
    case Family::petersen: return petersen();
    case Family::octahedron: return octahedron();
    case Family::k5_minus_e: return k5_minus_e();
    case Family::k_triangle: return k_triangle(spec.s);
    case Family::circular_ladder: return circular_ladder(spec.k);
    case Family::king_grid: return king_grid(spec.rows, spec.cols);
    case Family::k4_blowup: {
      Graph base = resolve_base(spec.base).graph;
      return k4_blowup(base, detail::pick_policy(spec, base));
    }
    case Family::octa_blowup: {
      Graph base = resolve_base(spec.base).graph;
      return octa_blowup(base, detail::pick_policy(spec, base));
    }
    case Family::fig2_fixture: return fig2_fixture(spec.id);
  }
  throw Error(Errc::unknown_family, "unhandled family");
}

inline ExpectedProfile expected_profile(const FamilySpec& spec) {
  ExpectedProfile p;
  switch (spec.family) {
    case Family::complete:
      p.order = spec.n;
      p.size = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
      p.connectivity = spec.n - 1;
      p.universal = true;
      return p;
    case Family::cycle:
      p.order = spec.n;
      p.size = spec.n;
      p.connectivity = 2;
      p.universal = (spec.n == 3);
      return p;
    case Family::path:
      p.order = spec.n;
      p.size = spec.n - 1;
      p.connectivity = spec.n == 1 ? 0 : 1;
      p.universal = (spec.n <= 3);
      return p;
    case Family::circulant: {
      p.order = spec.n;
      long long m = 0;
      for (int j : spec.jumps) m += (2 * j == spec.n) ? spec.n / 2 : spec.n;
      p.size = m;
      return p;
    }
    case Family::petersen:
      p.order = 10;
      p.size = 15;
      p.connectivity = 3;
      p.universal = false;
      return p;
    case Family::octahedron:
      p.order = 6;
      p.size = 12;
      p.connectivity = 4;
      p.cyclicity = 2;
      p.universal = false;
      return p;
    case Family::k5_minus_e:
      p.order = 5;
      p.size = 9;
      p.connectivity = 3;
      p.cyclicity = 2;
      p.universal = true;
      return p;
    case Family::k_triangle:
      p.order = spec.s + 3;
      p.size = 3LL * spec.s + 3;
      p.connectivity = 3;
      p.cyclicity = 2;
      p.universal = true;
      return p;
    case Family::circular_ladder:
      p.order = 2LL * spec.k;
      p.size = 3LL * spec.k;
      p.connectivity = 3;
      p.universal = false;
      return p;
    case Family::king_grid:
      p.order = static_cast<long long>(spec.rows) * spec.cols;
      p.size = static_cast<long long>(spec.rows) * (spec.cols - 1) + static_cast<long long>(spec.cols) * (spec.rows - 1) +
               2LL * (spec.rows - 1) * (spec.cols - 1);
      return p;
    case Family::k4_blowup:
    case Family::octa_blowup: {
      Graph base = resolve_base(spec.base).graph;
      BlowupPolicy pol = detail::pick_policy(spec, base);
      long long k = base.order();
      bool cubic = detail::cubic_policy(pol);
      bool octa = spec.family == Family::octa_blowup;
      long long block = octa ? 6 : 4;
      long long internal = octa ? 12 : 6;
      p.order = block * k;
      p.size = internal * k + (cubic ? 3 * k / 2 : 2 * k);
      p.connectivity = cubic ? 3 : 4;
      p.cyclicity = octa ? 2 : 1;
      p.universal = false;
      return p;
    }
    case Family::fig2_fixture: {
      if (spec.id == "kt3") return {6, 12, 3, 2, true};
      if (spec.id == "octa") return {6, 12, 4, 2, false};
      if (spec.id == "king3x3") return {9, 20, 3, 2, true};
      if (spec.id == "g7_16") return {7, 16, 4, 2, false};
      if (spec.id == "g8_18a") return {8, 18, 4, 2, false};
      if (spec.id == "c6_plus_two_hubs") return {8, 18, 4, 2, false};
      throw Error(Errc::unknown_fixture, "fixture '" + spec.id + "'");
    }
  }
  throw Error(Errc::unknown_family, "unhandled family");
}

// Certification outcome: the constructed graph measured against every claim
// its profile makes. Claims are verified with the cut/cyclic machinery, so a
// wrong construction cannot certify.
struct CertifyResult {
  std::string name;
  Graph graph;
  ExpectedProfile expected;
  int kappa = -1;                     // computed iff connectivity is claimed
  std::optional<bool> cyclic_ok;      // is_k_cyclic at the claimed level
  std::optional<bool> has_universal;  // computed iff universality is claimed
  bool ok = false;
  std::vector<std::string> mismatches;
};

inline std::string family_instance_name(const FamilySpec& spec) {
  std::string name = family_name(spec.family);
  switch (spec.family) {
    case Family::complete:
    case Family::cycle:
    case Family::path: name += "(" + std::to_string(spec.n) + ")"; break;
    case Family::circulant: {
      name += "(" + std::to_string(spec.n) + ",{";
      for (size_t i = 0; i < spec.jumps.size(); ++i)
        name += (i ? "," : "") + std::to_string(spec.jumps[i]);
      name += "})";
      break;
    }
    case Family::k_triangle: name += "(" + std::to_string(spec.s) + ")"; break;
    case Family::circular_ladder: name += "(" + std::to_string(spec.k) + ")"; break;
    case Family::king_grid: name += "(" + std::to_string(spec.rows) + "x" + std::to_string(spec.cols) + ")"; break;
    case Family::k4_blowup:
    case Family::octa_blowup:
      name += "(" + spec.base;
      if (spec.policy) name += std::string(",") + blowup_policy_name(*spec.policy);
      name += ")";
      break;
    case Family::fig2_fixture: name += "(" + spec.id + ")"; break;
    default: break;
  }
  return name;
}

inline CertifyResult certify(const FamilySpec& spec) {
  CertifyResult r;
  r.name = family_instance_name(spec);
  r.graph = make_family(spec);
  r.expected = expected_profile(spec);
  auto mismatch = [&r](const std::string& m) { r.mismatches.push_back(m); };
  if (r.graph.order() != r.expected.order)
    mismatch("order " + std::to_string(r.graph.order()) + " != " + std::to_string(r.expected.order));
  if (r.graph.size() != r.expected.size)
    mismatch("size " + std::to_string(r.graph.size()) + " != " + std::to_string(r.expected.size));
  if (r.expected.connectivity) {
    r.kappa = vertex_connectivity(r.graph);
    if (r.kappa != *r.expected.connectivity)
      mismatch("connectivity " + std::to_string(r.kappa) + " != " + std::to_string(*r.expected.connectivity));
  }
  if (r.expected.cyclicity) {
    r.cyclic_ok = is_k_cyclic(r.graph, *r.expected.cyclicity);
    if (!*r.cyclic_ok) mismatch("not " + std::to_string(*r.expected.cyclicity) + "-cyclic");
  }
  if (r.expected.universal) {
    r.has_universal = has_universal_vertex(r.graph);
    if (*r.has_universal != *r.expected.universal)
      mismatch(*r.has_universal ? "unexpected universal vertex" : "missing universal vertex");
  }
  r.ok = r.mismatches.empty();
  return r;
}

inline constexpr int kMaxEnumerationOrder = 7;

namespace detail {

// Labeled-graph encoding for the enumerator: pair q runs row-major over the
// upper triangle ((0,1),(0,2),...,(n-2,n-1)) and occupies bit P-1-q, so
// vertex 0's row forms the most significant block and "minimum mask" agrees
// with "lexicographically minimal adjacency string".
struct EnumFrame {
  int n, pairs;
  std::array<int8_t, 21> pi{}, pj{};              // bitpos -> endpoints
  std::array<std::array<int8_t, 8>, 8> pairbit{};  // (i,j) -> bitpos
  std::vector<std::array<int8_t, 21>> perm_src;    // per permutation, image bit sources

  explicit EnumFrame(int n_) : n(n_), pairs(n_ * (n_ - 1) / 2) {
    int q = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++q) {
        int bit = pairs - 1 - q;
        pi[bit] = static_cast<int8_t>(i);
        pj[bit] = static_cast<int8_t>(j);
        pairbit[i][j] = static_cast<int8_t>(bit);
      }
    std::array<int, 8> perm{};
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      std::array<int, 8> inv{};
      for (int i = 0; i < n; ++i) inv[perm[i]] = i;
      bool identity = true;
      std::array<int8_t, 21> src{};
      q = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++q) {
          int a = inv[i], b = inv[j];
          if (a > b) std::swap(a, b);
          src[q] = pairbit[a][b];
          if (src[q] != pairs - 1 - q) identity = false;
        }
      if (!identity) perm_src.push_back(src);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
  }
};

}  // namespace detail

// Streams every connected simple graph on n labeled-canonical vertices, one
// representative per isomorphism class, in increasing adjacency-mask order.
// A mask is emitted iff it is the minimum over all vertex relabelings; two
// cheap necessary conditions (vertex 0 has minimum degree, and its row is
// the trailing-ones pattern) prune before the full permutation check.
inline void enumerate_connected(int n, const std::function<void(const Graph&)>& yield) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw Error(Errc::order_above_cap, "built-in enumeration covers 1 <= n <= " +
                                           std::to_string(kMaxEnumerationOrder) +
                                           "; ingest a catalog for larger orders");
  if (n == 1) {
    yield(Graph::from_edges(1, {}));
    return;
  }
  detail::EnumFrame frame(n);
  int P = frame.pairs;
  for (uint32_t mask = 0; mask < (1u << P); ++mask) {
    std::array<uint8_t, 8> rows{};
    for (uint32_t rest = mask; rest;) {
      int bit = std::countr_zero(rest);
      rest &= rest - 1;
      rows[frame.pi[bit]] |= uint8_t(1u << frame.pj[bit]);
      rows[frame.pj[bit]] |= uint8_t(1u << frame.pi[bit]);
    }
    int d0 = std::popcount(unsigned(rows[0]));
    bool degree_ok = true;
    for (int v = 1; v < n; ++v)
      if (std::popcount(unsigned(rows[v])) < d0) {
        degree_ok = false;
        break;
      }
    if (!degree_ok) continue;
    if (rows[0] != ((1u << d0) - 1u) << (n - d0)) continue;
    // connectivity by neighborhood smearing
    uint32_t comp = 1, prev = 0;
    while (comp != prev) {
      prev = comp;
      for (uint32_t rest = comp; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        comp |= rows[v];
      }
    }
    if (comp != (1u << n) - 1u) continue;
    bool canonical = true;
    for (const auto& src : frame.perm_src) {
      int cmp = 0;
      for (int q = 0; q < P; ++q) {
        int img = (mask >> src[q]) & 1u;
        int cur = (mask >> (P - 1 - q)) & 1u;
        if (img != cur) {
          cmp = img - cur;
          break;
        }
      }
      if (cmp < 0) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<Edge> edges;
    for (uint32_t rest = mask; rest;) {
      int bit = std::countr_zero(rest);
      rest &= rest - 1;
      edges.emplace_back(frame.pi[bit], frame.pj[bit]);
    }
    std::sort(edges.begin(), edges.end());
    yield(Graph::from_edges(n, edges));
  }
}

inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  enumerate_connected(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace fcut
