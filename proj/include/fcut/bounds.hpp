#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cuts.hpp"
#include "cyclic.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace fcut {

// Hypothesis bundle guarding an edge bound. Every bound presumes a connected
// graph; min_connectivity = 1 means exactly that. cyclicity = 0 claims
// nothing. The cut-freeness flags are the expensive predicates.
struct Hypothesis {
  int min_order = 1;
  int min_connectivity = 1;
  int cyclicity = 0;
  bool no_forest_cut = false;
  bool no_independent_cut = false;
  bool no_universal_vertex = false;
};

// Edge bound e(G) >= slope*n + offset guarded by a hypothesis. `theorem`
// marks proven statements: a scan violation of one of those indicates an
// implementation bug, not a mathematical discovery.
struct BoundSpec {
  std::string name;
  Rational slope;
  Rational offset;
  Hypothesis hyp;
  bool theorem = false;
};

// The alpha-family bound e >= alpha*(n-3)+3 for graphs without forest cuts.
inline BoundSpec alpha_fc_bound(const Rational& alpha) {
  if (alpha < Rational(2) || alpha > Rational(3))
    throw Error(Errc::bad_parameter, "alpha-fc needs alpha in [2,3], got " + alpha.to_string());
  BoundSpec spec;
  spec.name = "alpha-fc(" + alpha.to_string() + ")";
  spec.slope = alpha;
  spec.offset = Rational(3) - Rational(3) * alpha;
  spec.hyp.no_forest_cut = true;
  spec.theorem = false;
  return spec;
}

// Registry of the named bounds this toolkit scans for.
inline std::vector<BoundSpec> named_bounds() {
  std::vector<BoundSpec> out;
  {
    // Proven: connected graphs without forest cuts have e >= 9n/4 - 15/4.
    BoundSpec b = alpha_fc_bound(Rational(9, 4));
    b.name = "thm-a";
    b.theorem = true;
    out.push_back(b);
  }
  {
    // Proven: 3-connected 1-cyclic graphs on n >= 6 have e >= 15n/8.
    BoundSpec b{"thm-b", Rational(15, 8), Rational(0), {}, true};
    b.hyp.min_order = 6;
    b.hyp.min_connectivity = 3;
    b.hyp.cyclicity = 1;
    out.push_back(b);
  }
  {
    // Proven: 3-connected 2-cyclic graphs on n >= 6 have e >= 2n.
    BoundSpec b{"thm-c", Rational(2), Rational(0), {}, true};
    b.hyp.min_order = 6;
    b.hyp.min_connectivity = 3;
    b.hyp.cyclicity = 2;
    out.push_back(b);
  }
  {
    // Proven: connected graphs with e < 2n-3 have an independent cut.
    BoundSpec b{"chen-yu", Rational(2), Rational(-3), {}, true};
    b.hyp.no_independent_cut = true;
    out.push_back(b);
  }
  {
    // Open upper end of the alpha family: no forest cut => e >= 3n-6.
    BoundSpec b = alpha_fc_bound(Rational(3));
    b.name = "conj-3n";
    out.push_back(b);
  }
  {
    // Refuted conjecture, kept as a scan target so the refutation stays
    // reproducible: 3-connected graphs with a cycle in every vertex
    // neighborhood would need e >= 7(n-1)/3. Universal vertices are
    // excluded so that 1-cyclicity captures the neighborhood condition.
    BoundSpec b{"conj-2", Rational(7, 3), Rational(-7, 3), {}, false};
    b.hyp.min_connectivity = 3;
    b.hyp.cyclicity = 1;
    b.hyp.no_universal_vertex = true;
    out.push_back(b);
  }
  {
    // Open: 4-connected 2-cyclic graphs on n >= 9 are conjectured to have
    // e >= 7n/3, tight at the quartic octahedral blowups.
    BoundSpec b{"conj-73", Rational(7, 3), Rational(0), {}, false};
    b.hyp.min_order = 9;
    b.hyp.min_connectivity = 4;
    b.hyp.cyclicity = 2;
    out.push_back(b);
  }
  {
    // Speculative strengthening of thm-c for n >= 10; scan target only.
    BoundSpec b{"open-94", Rational(9, 4), Rational(0), {}, false};
    b.hyp.min_order = 10;
    b.hyp.min_connectivity = 3;
    b.hyp.cyclicity = 2;
    out.push_back(b);
  }
  return out;
}

inline BoundSpec named_bound(const std::string& name) {
  for (auto& b : named_bounds())
    if (b.name == name) return b;
  throw Error(Errc::bad_parameter, "unknown bound '" + name + "'");
}

inline Rational bound_value(const BoundSpec& spec, long long n) { return spec.slope * Rational(n) + spec.offset; }

// Everything established while gating a graph against a hypothesis; fields
// are filled in evaluation order and left empty past the first failure.
struct HypothesisCertificate {
  bool matched = false;
  std::string failed_predicate;  // empty iff matched
  long long order = 0;
  long long edges = 0;
  std::optional<bool> universal;
  std::optional<int> kappa;
  std::optional<bool> cyclic_ok;
  std::optional<bool> independent_cut_free;
  std::optional<bool> forest_cut_free;
};

// Gate order: order, universal flag, connectivity, cyclicity, independent
// cut, forest cut; cheapest first, subset searches last.
inline HypothesisCertificate check_hypothesis(const Graph& g, const Hypothesis& hyp) {
  HypothesisCertificate cert;
  cert.order = g.order();
  cert.edges = g.size();
  if (g.order() < hyp.min_order) {
    cert.failed_predicate = "order";
    return cert;
  }
  if (hyp.no_universal_vertex) {
    cert.universal = has_universal_vertex(g);
    if (*cert.universal) {
      cert.failed_predicate = "universal-vertex";
      return cert;
    }
  }
  if (hyp.min_connectivity <= 1) {
    if (!is_connected(g)) {
      cert.failed_predicate = "connectivity";
      return cert;
    }
  } else {
    cert.kappa = vertex_connectivity(g);
    if (*cert.kappa < hyp.min_connectivity) {
      cert.failed_predicate = "connectivity";
      return cert;
    }
  }
  if (hyp.cyclicity > 0) {
    // Sets never exceed the order, so k-cyclicity at k > n equals k = n.
    cert.cyclic_ok = is_k_cyclic(g, std::min(hyp.cyclicity, g.order()));
    if (!*cert.cyclic_ok) {
      cert.failed_predicate = "cyclicity";
      return cert;
    }
  }
  if (hyp.no_independent_cut) {
    cert.independent_cut_free = !find_independent_cut(g).has_value();
    if (!*cert.independent_cut_free) {
      cert.failed_predicate = "independent-cut";
      return cert;
    }
  }
  if (hyp.no_forest_cut) {
    cert.forest_cut_free = !find_forest_cut(g).has_value();
    if (!*cert.forest_cut_free) {
      cert.failed_predicate = "forest-cut";
      return cert;
    }
  }
  cert.matched = true;
  return cert;
}

enum class BoundOutcome { not_applicable, holds, violation };

struct BoundCheck {
  BoundOutcome outcome = BoundOutcome::not_applicable;
  std::string name;
  bool theorem = false;
  HypothesisCertificate cert;
  Rational bound;  // meaningful unless not_applicable
};

// not_applicable when the hypothesis bundle fails (reported distinctly:
// threshold cases like n=5 against thm-b must stay visible); otherwise the
// exact rational comparison e(G) >= slope*n + offset decides.
inline BoundCheck check_bound(const Graph& g, const BoundSpec& spec) {
  BoundCheck r;
  r.name = spec.name;
  r.theorem = spec.theorem;
  r.cert = check_hypothesis(g, spec.hyp);
  if (!r.cert.matched) return r;
  r.bound = bound_value(spec, g.order());
  r.outcome = Rational(g.size()) >= r.bound ? BoundOutcome::holds : BoundOutcome::violation;
  return r;
}

struct LemmaClause {
  bool pass = true;
  int offender = -1;  // a vertex witnessing failure, when pass is false
};

struct Deg3LemmaReport {
  bool applicable = false;
  std::string gate_failed;  // which precondition excluded the graph
  LemmaClause no_deg3_adjacency;    // (a) no two degree-3 vertices adjacent
  LemmaClause three_heavy_neighbors;  // (b) every vertex has >= 3 neighbors of degree >= 4
  bool via_k_triangle = false;        // (b) discharged by the K-triangle shape
  bool pass() const { return no_deg3_adjacency.pass && three_heavy_neighbors.pass; }
};

// For 3-connected 1-cyclic graphs on n >= 5: (a) degree-3 vertices form an
// independent set, and (b) the graph is a K-triangle or every vertex has at
// least three neighbors of degree >= 4.
inline Deg3LemmaReport check_lemma_deg3(const Graph& g) {
  Deg3LemmaReport r;
  if (g.order() < 5) {
    r.gate_failed = "order";
    return r;
  }
  if (vertex_connectivity(g) < 3) {
    r.gate_failed = "connectivity";
    return r;
  }
  if (!is_k_cyclic(g, 1)) {
    r.gate_failed = "cyclicity";
    return r;
  }
  r.applicable = true;
  for (int v = 0; v < g.order() && r.no_deg3_adjacency.pass; ++v) {
    if (g.degree(v) != 3) continue;
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      if (g.degree(u) == 3) {
        r.no_deg3_adjacency = {false, v};
        break;
      }
  }
  if (is_k_triangle(g)) {
    r.via_k_triangle = true;
    return r;
  }
  for (int v = 0; v < g.order(); ++v) {
    int heavy = 0;
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      if (g.degree(u) >= 4) ++heavy;
    if (heavy < 3) {
      r.three_heavy_neighbors = {false, v};
      return r;
    }
  }
  return r;
}

struct TwoDeg5LemmaReport {
  bool applicable = false;
  std::string gate_failed;
  LemmaClause clause;  // every degree-3 vertex has >= 2 neighbors of degree >= 5
  bool pass() const { return clause.pass; }
};

// For 3-connected 2-cyclic graphs on n >= 6.
inline TwoDeg5LemmaReport check_lemma_2deg5(const Graph& g) {
  TwoDeg5LemmaReport r;
  if (g.order() < 6) {
    r.gate_failed = "order";
    return r;
  }
  if (vertex_connectivity(g) < 3) {
    r.gate_failed = "connectivity";
    return r;
  }
  if (!is_k_cyclic(g, 2)) {
    r.gate_failed = "cyclicity";
    return r;
  }
  r.applicable = true;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) continue;
    int heavy = 0;
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      if (g.degree(u) >= 5) ++heavy;
    if (heavy < 2) {
      r.clause = {false, v};
      return r;
    }
  }
  return r;
}

struct DegreeClassEdgeCount {
  int low_degree = 0;
  int high_degree = 0;
  long long count = 0;
};

// Edges joining a vertex of degree exactly `low` to one of degree >= `high`.
inline DegreeClassEdgeCount degree_class_edges(const Graph& g, int low, int high) {
  if (low >= high) throw Error(Errc::bad_parameter, "degree_class_edges needs low < high");
  DegreeClassEdgeCount r{low, high, 0};
  for (auto [u, v] : g.edge_list()) {
    int du = g.degree(u), dv = g.degree(v);
    if ((du == low && dv >= high) || (dv == low && du >= high)) ++r.count;
  }
  return r;
}

}  // namespace fcut
