// fcut: command-line front end for the vertex-cut / k-cyclic toolkit.
//
// Exit codes follow one contract across verbs: 0 means the property holds or
// the operation succeeded, 1 means a witness or violation was found (printed
// to stdout), 2 means bad input or usage.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcut/forestcut.hpp"

namespace {

using nlohmann::json;

int parse_int(const std::string& tok, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (...) {
    throw fcut::Error(fcut::Errc::bad_parameter, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
}

std::vector<int> parse_jump_list(const std::string& text) {
  std::vector<int> jumps;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) jumps.push_back(parse_int(cur, "jump"));
  return jumps;
}

fcut::BlowupPolicy parse_policy(const std::string& token) {
  if (token == "one-external") return fcut::BlowupPolicy::one_external;
  if (token == "all-external") return fcut::BlowupPolicy::all_external;
  if (token == "three-external") return fcut::BlowupPolicy::three_external;
  if (token == "four-external") return fcut::BlowupPolicy::four_external;
  throw fcut::Error(fcut::Errc::bad_parameter, "unknown policy '" + token + "'");
}

fcut::CatalogFormat parse_format(const std::string& token) {
  if (token == "g6") return fcut::CatalogFormat::graph6;
  if (token == "edges") return fcut::CatalogFormat::edge_list_multi;
  throw fcut::Error(fcut::Errc::bad_parameter, "unknown format '" + token + "' (expected g6 or edges)");
}

// Options shared by every verb that takes one input graph. Exactly one
// source must be given: a file path (or '-' for stdin), an inline edge list,
// or a generator spec with its parameters.
struct SourceOpts {
  std::vector<std::string> params;  // positionals: file path, or family parameters after --gen
  std::string gen;
  std::string edges;
  std::string format = "g6";
  int n = -1;
  int s = -1;
  int rows = -1;
  int cols = -1;
  std::string jumps;
  std::string base;
  std::string policy;
  std::string id;
  int max_order = fcut::kDefaultMaxParseOrder;
};

void add_source_options(CLI::App* sub, SourceOpts& o) {
  sub->add_option("input", o.params, "graph file ('-' for stdin), or parameters for --gen");
  sub->add_option("--gen", o.gen, "generate the input: family name (see 'fcut gen --help')");
  sub->add_option("--edges", o.edges, "inline edge list: \"n m u v u v ...\"");
  sub->add_option("--format", o.format, "input file format: g6 or edges")->check(CLI::IsMember({"g6", "edges"}));
  sub->add_option("--n", o.n, "order parameter (complete, cycle, path, circulant, circular-ladder)");
  sub->add_option("--s", o.s, "k-triangle: number of attached vertices");
  sub->add_option("--rows", o.rows, "king-grid rows");
  sub->add_option("--cols", o.cols, "king-grid columns");
  sub->add_option("--jumps", o.jumps, "circulant jumps, comma separated (e.g. 1,2)");
  sub->add_option("--base", o.base, "blowup base: k4, k33, cl<k>, petersen, k5, c<n>");
  sub->add_option("--policy", o.policy, "blowup policy: one-/all-/three-/four-external");
  sub->add_option("--id", o.id, "fig2 fixture id");
  sub->add_option("--max-order", o.max_order, "largest order accepted from files");
}

fcut::FamilySpec family_spec_from(const std::string& family, const std::vector<std::string>& params,
                                  const SourceOpts& o) {
  fcut::FamilySpec fs;
  fs.family = fcut::parse_family(family);
  size_t cursor = 0;
  auto pop = [&](const char* what) -> const std::string& {
    if (cursor < params.size()) return params[cursor++];
    throw fcut::Error(fcut::Errc::bad_parameter, std::string(family) + " needs " + what);
  };
  auto int_param = [&](int named, const char* what) {
    return named >= 0 ? named : parse_int(pop(what), what);
  };
  using fcut::Family;
  switch (fs.family) {
    case Family::complete:
    case Family::cycle:
    case Family::path:
      fs.n = int_param(o.n, "an order (--n)");
      break;
    case Family::circulant:
      fs.n = int_param(o.n, "an order (--n)");
      if (!o.jumps.empty())
        fs.jumps = parse_jump_list(o.jumps);
      else
        fs.jumps = parse_jump_list(pop("jumps (--jumps 1,2)"));
      break;
    case Family::k_triangle:
      fs.s = o.s >= 0 ? o.s : int_param(o.n, "s (--s)");
      break;
    case Family::circular_ladder:
      fs.k = int_param(o.n, "a rung count (--n)");
      break;
    case Family::king_grid:
      fs.rows = int_param(o.rows, "rows (--rows)");
      fs.cols = int_param(o.cols, "columns (--cols)");
      break;
    case Family::k4_blowup:
    case Family::octa_blowup:
      fs.base = !o.base.empty() ? o.base : pop("a base (--base)");
      if (!o.policy.empty()) fs.policy = parse_policy(o.policy);
      break;
    case Family::fig2_fixture:
      fs.id = !o.id.empty() ? o.id : pop("a fixture id (--id)");
      break;
    default:
      break;  // parameterless families
  }
  if (cursor < params.size())
    throw fcut::Error(fcut::Errc::bad_parameter,
                      "unused trailing parameter '" + params[cursor] + "' after --gen " + family);
  return fs;
}

// Applies FCUT_CATALOG_DIR as a fallback directory for relative paths that
// do not resolve from the working directory.
std::string resolve_catalog_path(const std::string& path) {
  if (path == "-" || std::filesystem::exists(path)) return path;
  if (std::filesystem::path(path).is_relative()) {
    if (const char* dir = std::getenv("FCUT_CATALOG_DIR")) {
      std::filesystem::path candidate = std::filesystem::path(dir) / path;
      if (std::filesystem::exists(candidate)) return candidate.string();
    }
  }
  return path;
}

fcut::Graph read_first_graph(std::istream& in, fcut::CatalogFormat fmt, int max_order) {
  fcut::CatalogReader reader(in, fmt, fcut::ErrorPolicy::abort, max_order);
  auto entry = reader.next();
  if (!entry) throw fcut::Error(fcut::Errc::count_mismatch, "input holds no graph");
  return entry->graph;
}

fcut::Graph resolve_graph(const SourceOpts& o) {
  int sources = (!o.gen.empty() ? 1 : 0) + (!o.edges.empty() ? 1 : 0);
  if (o.gen.empty() && !o.params.empty()) ++sources;
  if (sources != 1)
    throw fcut::Error(fcut::Errc::bad_parameter,
                      "exactly one input source required: a file, --gen <family>, or --edges");
  if (!o.gen.empty()) return fcut::make_family(family_spec_from(o.gen, o.params, o));
  if (!o.edges.empty()) return fcut::parse_edge_list(o.edges, o.max_order);
  if (o.params.size() != 1)
    throw fcut::Error(fcut::Errc::bad_parameter, "expected exactly one input file");
  const std::string& path = o.params[0];
  if (path == "-") return read_first_graph(std::cin, parse_format(o.format), o.max_order);
  std::ifstream f(resolve_catalog_path(path), std::ios::binary);
  if (!f) throw fcut::Error(fcut::Errc::io_failure, "cannot open '" + path + "'");
  return read_first_graph(f, parse_format(o.format), o.max_order);
}

int run_cut(const std::string& kind_token, const SourceOpts& o) {
  fcut::Graph g = resolve_graph(o);
  bool forest = kind_token == "forest";
  auto w = forest ? fcut::find_forest_cut(g) : fcut::find_independent_cut(g);
  if (!w) {
    std::cout << "no " << kind_token << " cut\n";
    return 0;
  }
  if (!fcut::witness_is_valid(g, *w))
    throw fcut::Error(fcut::Errc::bad_parameter, "internal: search produced an invalid witness");
  std::cout << kind_token << " cut found: cut=" << w->cut.to_string() << " side=" << w->side.to_string() << "\n";
  return 1;
}

int run_cyclic(int k, const SourceOpts& o) {
  fcut::Graph g = resolve_graph(o);
  auto w = fcut::cyclic_witness(g, k);
  if (!w) {
    std::cout << k << "-cyclic: yes\n";
    return 0;
  }
  if (!fcut::cyclic_witness_is_valid(g, k, *w))
    throw fcut::Error(fcut::Errc::bad_parameter, "internal: search produced an invalid witness");
  std::cout << "not " << k << "-cyclic: violating set " << w->violating_set.to_string()
            << " (not dominating, neighborhood acyclic)\n";
  return 1;
}

int run_connectivity(const SourceOpts& o) {
  fcut::Graph g = resolve_graph(o);
  std::cout << fcut::vertex_connectivity(g) << "\n";
  return 0;
}

int run_gen(const std::string& family, const SourceOpts& o, const std::string& out_format) {
  fcut::FamilySpec fs = family_spec_from(family, o.params, o);
  fcut::Graph g = fcut::make_family(fs);
  if (out_format == "g6")
    std::cout << fcut::write_graph6(g) << "\n";
  else
    std::cout << fcut::write_edge_list(g) << "\n";
  return 0;
}

int run_certify(const std::string& family, const SourceOpts& o) {
  fcut::FamilySpec fs = family_spec_from(family, o.params, o);
  fcut::CertifyResult r = fcut::certify(fs);
  std::cout << r.name << ": n=" << r.graph.order() << " e=" << r.graph.size();
  if (r.expected.connectivity) std::cout << " kappa=" << r.kappa;
  if (r.expected.cyclicity)
    std::cout << " cyclic(" << *r.expected.cyclicity << ")=" << (*r.cyclic_ok ? "yes" : "no");
  if (r.expected.universal) std::cout << " universal=" << (*r.has_universal ? "yes" : "no");
  std::cout << (r.ok ? " OK" : " MISMATCH") << "\n";
  for (const auto& m : r.mismatches) std::cout << "  mismatch: " << m << "\n";
  return r.ok ? 0 : 1;
}

struct ScanOpts {
  std::string catalog;
  std::string format = "g6";
  int enumerate_n = -1;
  int enumerate_upto = -1;
  std::vector<std::string> bounds;
  std::vector<std::string> alphas;
  bool lemmas = false;
  int workers = 1;
  std::string policy = "abort";
  int max_order = fcut::kDefaultMaxParseOrder;
  std::string report_path;
};

int run_scan(const ScanOpts& o) {
  int sources = (!o.catalog.empty() ? 1 : 0) + (o.enumerate_n >= 0 ? 1 : 0) + (o.enumerate_upto >= 0 ? 1 : 0);
  if (sources != 1)
    throw fcut::Error(fcut::Errc::bad_parameter,
                      "scan needs exactly one source: --catalog, --enumerate, or --enumerate-upto");
  std::vector<fcut::BoundSpec> specs;
  for (const auto& name : o.bounds) {
    try {
      specs.push_back(fcut::named_bound(name));
    } catch (const fcut::Error&) {
      throw fcut::Error(fcut::Errc::bad_parameter,
                        "unknown bound '" + name +
                            "' (known: thm-a, thm-b, thm-c, chen-yu, conj-3n, conj-2, conj-73, open-94; "
                            "use --alpha for alpha-fc)");
    }
  }
  for (const auto& a : o.alphas) specs.push_back(fcut::alpha_fc_bound(fcut::Rational::parse(a)));
  if (specs.empty() && !o.lemmas)
    throw fcut::Error(fcut::Errc::bad_parameter, "no checks requested: give --bound, --alpha, or --lemmas");

  fcut::ScanOptions options;
  options.workers = o.workers;
  options.lemmas = o.lemmas;

  std::ifstream file;
  std::unique_ptr<fcut::CatalogReader> reader;
  fcut::EntrySource source;
  if (!o.catalog.empty()) {
    std::istream* in = &std::cin;
    if (o.catalog != "-") {
      file.open(resolve_catalog_path(o.catalog), std::ios::binary);
      if (!file) throw fcut::Error(fcut::Errc::io_failure, "cannot open '" + o.catalog + "'");
      in = &file;
    }
    auto policy = o.policy == "skip" ? fcut::ErrorPolicy::skip : fcut::ErrorPolicy::abort;
    reader = std::make_unique<fcut::CatalogReader>(*in, parse_format(o.format), policy, o.max_order);
    source = fcut::catalog_source(*reader);
  } else if (o.enumerate_n >= 0) {
    source = fcut::enumeration_source(o.enumerate_n);
  } else {
    source = fcut::enumeration_source_upto(o.enumerate_upto);
  }

  fcut::ScanReport report = fcut::scan(source, specs, options);

  std::cout << "scanned " << report.graphs_tested << " graphs in " << report.elapsed_ms << " ms\n";
  for (const auto& [name, stats] : report.per_check)
    std::cout << "check " << name << ": " << stats.hypothesis_matches << " hypothesis matches, " << stats.violations
              << " violations\n";
  for (const auto& v : report.violations) {
    std::cout << "violation index=" << v.index << " check=" << v.check << " graph6=" << v.graph6 << " n=" << v.order
              << " e=" << v.edges;
    if (!v.bound.empty()) std::cout << " bound=" << v.bound;
    std::cout << " " << v.detail << "\n";
    if (v.theorem)
      std::cout << "  note: '" << v.check << "' is a proven statement; this violation indicates an implementation bug\n";
  }
  if (reader && !reader->diagnostics().empty()) {
    for (const auto& d : reader->diagnostics())
      std::cerr << "skipped malformed entry at byte " << d.byte_offset << ": " << d.message << "\n";
  }

  if (!o.report_path.empty()) {
    std::ofstream rep(o.report_path, std::ios::binary);
    if (!rep) throw fcut::Error(fcut::Errc::io_failure, "cannot open report file '" + o.report_path + "'");
    for (const auto& v : report.violations) {
      json rec{{"index", v.index}, {"graph6", v.graph6}, {"check", v.check},  {"theorem", v.theorem},
               {"n", v.order},     {"e", v.edges},       {"bound", v.bound},  {"detail", v.detail}};
      rep << rec.dump() << "\n";
    }
  }
  return report.violations.empty() ? 0 : 1;
}

struct ConvertOpts {
  std::string from = "g6";
  std::string to = "edges";
  std::string in_path = "-";
  std::string out_path = "-";
  int max_order = fcut::kDefaultMaxParseOrder;
};

int run_convert(const ConvertOpts& o) {
  std::ifstream fin;
  std::istream* in = &std::cin;
  if (o.in_path != "-") {
    fin.open(resolve_catalog_path(o.in_path), std::ios::binary);
    if (!fin) throw fcut::Error(fcut::Errc::io_failure, "cannot open '" + o.in_path + "'");
    in = &fin;
  }
  std::ofstream fout;
  std::ostream* out = &std::cout;
  if (o.out_path != "-") {
    fout.open(o.out_path, std::ios::binary);
    if (!fout) throw fcut::Error(fcut::Errc::io_failure, "cannot open '" + o.out_path + "'");
    out = &fout;
  }
  fcut::CatalogReader reader(*in, parse_format(o.from), fcut::ErrorPolicy::abort, o.max_order);
  bool g6_out = o.to == "g6";
  bool first = true;
  while (auto entry = reader.next()) {
    if (g6_out)
      *out << fcut::write_graph6(entry->graph) << "\n";
    else {
      if (!first) *out << "\n";
      *out << fcut::write_edge_list(entry->graph) << "\n";
    }
    first = false;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact vertex-cut and k-cyclic graph analysis"};
  app.require_subcommand(1);

  // cut
  auto* cut = app.add_subcommand("cut", "search for a forest or independent vertex cut (exit 1 when found)");
  std::string cut_kind;
  cut->add_option("kind", cut_kind, "forest or independent")->required()->check(CLI::IsMember({"forest", "independent"}));
  SourceOpts cut_src;
  add_source_options(cut, cut_src);

  // cyclic
  auto* cyc = app.add_subcommand("cyclic", "test k-cyclicity (exit 1 with witness when refuted)");
  int cyclic_k = 1;
  cyc->add_option("--k", cyclic_k, "cyclicity level")->required();
  SourceOpts cyc_src;
  add_source_options(cyc, cyc_src);

  // connectivity
  auto* conn = app.add_subcommand("connectivity", "print the vertex connectivity");
  SourceOpts conn_src;
  add_source_options(conn, conn_src);

  // gen
  auto* gen = app.add_subcommand("gen", "construct a named family member and print it");
  std::string gen_family;
  gen->add_option("family", gen_family,
                  "complete, cycle, path, circulant, petersen, octahedron, k5-minus-e, k-triangle, "
                  "circular-ladder, king-grid, k4-blowup, octa-blowup, fig2")
      ->required();
  SourceOpts gen_src;
  add_source_options(gen, gen_src);
  std::string gen_out = "g6";
  gen->add_option("--out", gen_out, "output format: g6 or edges")->check(CLI::IsMember({"g6", "edges"}));

  // certify
  auto* cert = app.add_subcommand("certify", "construct a family member and verify its expected profile");
  std::string cert_family;
  cert->add_option("family", cert_family, "family name (as in gen)")->required();
  SourceOpts cert_src;
  add_source_options(cert, cert_src);

  // scan
  auto* scan = app.add_subcommand("scan", "run bound/lemma checks over a catalog or the built-in enumeration");
  ScanOpts scan_opts;
  scan->add_option("--catalog", scan_opts.catalog, "catalog file ('-' for stdin)");
  scan->add_option("--format", scan_opts.format, "catalog format: g6 or edges")->check(CLI::IsMember({"g6", "edges"}));
  scan->add_option("--enumerate", scan_opts.enumerate_n, "scan all connected graphs on exactly n vertices (n <= 7)");
  scan->add_option("--enumerate-upto", scan_opts.enumerate_upto, "scan all connected graphs on 1..n vertices (n <= 7)");
  scan->add_option("--bound", scan_opts.bounds, "named bound to check (repeatable)");
  scan->add_option("--alpha", scan_opts.alphas, "alpha-fc bound with this alpha, e.g. 9/4 (repeatable)");
  scan->add_flag("--lemmas", scan_opts.lemmas, "also run the degree-lemma checks");
  scan->add_option("--workers", scan_opts.workers, "worker threads (default 1)");
  scan->add_option("--policy", scan_opts.policy, "malformed-entry policy: abort or skip")
      ->check(CLI::IsMember({"abort", "skip"}));
  scan->add_option("--max-order", scan_opts.max_order, "largest order accepted from the catalog");
  scan->add_option("--report", scan_opts.report_path, "write violations as JSON lines to this file");

  // convert
  auto* conv = app.add_subcommand("convert", "re-encode a graph stream between g6 and edge-list formats");
  ConvertOpts conv_opts;
  conv->add_option("--from", conv_opts.from, "input format: g6 or edges")->check(CLI::IsMember({"g6", "edges"}));
  conv->add_option("--to", conv_opts.to, "output format: g6 or edges")->check(CLI::IsMember({"g6", "edges"}));
  conv->add_option("--in", conv_opts.in_path, "input file ('-' for stdin)");
  conv->add_option("--out", conv_opts.out_path, "output file ('-' for stdout)");
  conv->add_option("--max-order", conv_opts.max_order, "largest order accepted");

  int rc = 0;
  try {
    app.parse(argc, argv);
    if (cut->parsed()) rc = run_cut(cut_kind, cut_src);
    else if (cyc->parsed()) rc = run_cyclic(cyclic_k, cyc_src);
    else if (conn->parsed()) rc = run_connectivity(conn_src);
    else if (gen->parsed()) rc = run_gen(gen_family, gen_src, gen_out);
    else if (cert->parsed()) rc = run_certify(cert_family, cert_src);
    else if (scan->parsed()) rc = run_scan(scan_opts);
    else if (conv->parsed()) rc = run_convert(conv_opts);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const fcut::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
