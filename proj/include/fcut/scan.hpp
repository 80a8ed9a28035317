#pragma once

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"

namespace fcut {

// Pull-based entry supply for the scanner. Sources are not thread-safe; the
// scanner serializes access, so decoding stays sequential while decoded
// entries fan out to workers.
using EntrySource = std::function<std::optional<CatalogEntry>()>;

inline EntrySource catalog_source(CatalogReader& reader) {
  return [&reader] { return reader.next(); };
}

inline EntrySource vector_source(std::vector<Graph> graphs) {
  auto state = std::make_shared<std::pair<std::vector<Graph>, size_t>>(std::move(graphs), 0);
  return [state]() -> std::optional<CatalogEntry> {
    if (state->second >= state->first.size()) return std::nullopt;
    long long i = static_cast<long long>(state->second++);
    return CatalogEntry{i, state->first[i], 0};
  };
}

// All connected graphs on exactly n vertices (n <= 7), pre-materialized.
inline EntrySource enumeration_source(int n) { return vector_source(connected_graphs(n)); }

// All connected graphs on 1..n vertices, smallest orders first.
inline EntrySource enumeration_source_upto(int n) {
  std::vector<Graph> all;
  for (int i = 1; i <= n; ++i)
    for (auto& g : connected_graphs(i)) all.push_back(std::move(g));
  return vector_source(std::move(all));
}

struct ScanOptions {
  int workers = 1;
  bool lemmas = false;            // run the two degree lemmas as checks
  bool counting_identity = true;  // instrument sum(n_i)=n and sum(i*n_i)=2e
};

struct CheckStats {
  long long hypothesis_matches = 0;
  long long violations = 0;
};

// One failed check on one catalog entry, with enough evidence to reproduce
// it without rerunning the scan.
struct ScanViolation {
  long long index = 0;
  std::string graph6;
  std::string check;
  bool theorem = false;  // true: this contradicts a proven statement (a bug)
  long long order = 0;
  long long edges = 0;
  std::string bound;   // bound value for bound checks, empty for lemmas
  std::string detail;  // failed clause, offender vertex, certificates
};

struct ScanReport {
  long long graphs_tested = 0;
  std::map<std::string, CheckStats> per_check;  // keyed by check name
  std::vector<ScanViolation> violations;        // sorted by (index, check)
  long long elapsed_ms = 0;

  long long total_violations() const { return static_cast<long long>(violations.size()); }
  bool theorem_violated() const {
    for (auto& v : violations)
      if (v.theorem) return true;
    return false;
  }
};

namespace detail {

inline std::string certificate_text(const HypothesisCertificate& cert) {
  std::string s = "n=" + std::to_string(cert.order) + " e=" + std::to_string(cert.edges);
  if (cert.universal) s += std::string(" universal=") + (*cert.universal ? "yes" : "no");
  if (cert.kappa) s += " kappa=" + std::to_string(*cert.kappa);
  if (cert.cyclic_ok) s += std::string(" cyclic=") + (*cert.cyclic_ok ? "yes" : "no");
  if (cert.independent_cut_free)
    s += std::string(" independent-cut-free=") + (*cert.independent_cut_free ? "yes" : "no");
  if (cert.forest_cut_free) s += std::string(" forest-cut-free=") + (*cert.forest_cut_free ? "yes" : "no");
  return s;
}

struct EntryResult {
  std::map<std::string, CheckStats> per_check;
  std::vector<ScanViolation> violations;
};

inline void scan_entry(const CatalogEntry& entry, const std::vector<BoundSpec>& specs, const ScanOptions& opt,
                       EntryResult& out) {
  const Graph& g = entry.graph;
  auto violation = [&](const std::string& check, bool theorem, const std::string& bound, const std::string& detail) {
    ScanViolation v;
    v.index = entry.index;
    v.graph6 = write_graph6(g);
    v.check = check;
    v.theorem = theorem;
    v.order = g.order();
    v.edges = g.size();
    v.bound = bound;
    v.detail = detail;
    out.violations.push_back(std::move(v));
  };

  for (const auto& spec : specs) {
    BoundCheck r = check_bound(g, spec);
    auto& stats = out.per_check[spec.name];
    if (r.outcome == BoundOutcome::not_applicable) continue;
    ++stats.hypothesis_matches;
    if (r.outcome == BoundOutcome::violation) {
      ++stats.violations;
      violation(spec.name, spec.theorem, r.bound.to_string(),
                "e(G) < " + r.bound.to_string() + " [" + certificate_text(r.cert) + "]");
    }
  }

  if (opt.counting_identity) {
    auto& stats = out.per_check["counting-identity"];
    ++stats.hypothesis_matches;
    DegreeHistogram h = degree_histogram(g);
    if (h.vertex_total() != g.order() || h.degree_total() != 2LL * g.size()) {
      ++stats.violations;
      violation("counting-identity", true, "",
                "degree histogram sums to (" + std::to_string(h.vertex_total()) + ", " +
                    std::to_string(h.degree_total()) + "), expected (" + std::to_string(g.order()) + ", " +
                    std::to_string(2LL * g.size()) + ")");
    }
  }

  if (opt.lemmas) {
    {
      Deg3LemmaReport r = check_lemma_deg3(g);
      auto& stats = out.per_check["lemma-deg3"];
      if (r.applicable) {
        ++stats.hypothesis_matches;
        if (!r.pass()) {
          ++stats.violations;
          std::string which = !r.no_deg3_adjacency.pass
                                  ? "clause (a) offender vertex " + std::to_string(r.no_deg3_adjacency.offender)
                                  : "clause (b) offender vertex " + std::to_string(r.three_heavy_neighbors.offender);
          violation("lemma-deg3", true, "", which);
        }
      }
    }
    {
      TwoDeg5LemmaReport r = check_lemma_2deg5(g);
      auto& stats = out.per_check["lemma-2deg5"];
      bool applicable = r.applicable;
      if (applicable) {
        ++stats.hypothesis_matches;
        if (!r.pass()) {
          ++stats.violations;
          violation("lemma-2deg5", true, "", "offender vertex " + std::to_string(r.clause.offender));
        }
      }
      // Scan-level corollary on the same gate: edges from degree-3 vertices
      // into degree >= 5 vertices number at least twice the degree-3 count.
      if (applicable) {
        auto& fstats = out.per_check["f-edges-2n3"];
        ++fstats.hypothesis_matches;
        long long n3 = 0;
        for (int v = 0; v < g.order(); ++v)
          if (g.degree(v) == 3) ++n3;
        DegreeClassEdgeCount f = degree_class_edges(g, 3, 5);
        if (f.count < 2 * n3) {
          ++fstats.violations;
          violation("f-edges-2n3", true, "", "|F|=" + std::to_string(f.count) + " < 2*n3=" + std::to_string(2 * n3));
        }
      }
    }
  }
}

inline void merge_into(ScanReport& report, const EntryResult& r) {
  for (auto& [name, stats] : r.per_check) {
    auto& agg = report.per_check[name];
    agg.hypothesis_matches += stats.hypothesis_matches;
    agg.violations += stats.violations;
  }
  for (auto& v : r.violations) report.violations.push_back(v);
}

}  // namespace detail

// Runs every check against every entry. The report is deterministic for any
// worker count: per-check tallies are order-independent sums and violations
// are sorted by (index, check) at the end. Source access and report merging
// are the only synchronized sections; checking itself runs in parallel.
inline ScanReport scan(const EntrySource& source, const std::vector<BoundSpec>& specs,
                       const ScanOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  ScanReport report;
  for (const auto& spec : specs) report.per_check[spec.name];  // stable keys even with zero matches
  if (opt.counting_identity) report.per_check["counting-identity"];
  if (opt.lemmas) {
    report.per_check["lemma-deg3"];
    report.per_check["lemma-2deg5"];
    report.per_check["f-edges-2n3"];
  }

  std::mutex source_mu, report_mu;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      std::optional<CatalogEntry> entry;
      {
        std::lock_guard<std::mutex> lock(source_mu);
        if (failure) return;
        try {
          entry = source();
        } catch (...) {
          failure = std::current_exception();
          return;
        }
      }
      if (!entry) return;
      detail::EntryResult result;
      detail::scan_entry(*entry, specs, opt, result);
      std::lock_guard<std::mutex> lock(report_mu);
      ++report.graphs_tested;
      detail::merge_into(report, result);
    }
  };

  int workers = std::max(1, opt.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(report.violations.begin(), report.violations.end(),
            [](const ScanViolation& a, const ScanViolation& b) {
              return a.index != b.index ? a.index < b.index : a.check < b.check;
            });
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace fcut
