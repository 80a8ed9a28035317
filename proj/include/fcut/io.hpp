#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace fcut {

// Largest order the parsers accept by default; the graph6 format itself
// reaches 2^36-1 but a dense adjacency at that size is useless here.
inline constexpr int kDefaultMaxParseOrder = 4096;

// graph6: printable encoding of the upper adjacency triangle. Header N(n) is
// one byte n+63 for n <= 62, '~' plus an 18-bit group for n <= 258047, '~~'
// plus a 36-bit group beyond. Body bits run column-major ((i,j), i<j, j
// ascending, i ascending within a column), packed big-endian into 6-bit
// groups, each emitted as value+63 and zero-padded at the end.
inline std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  } else {
    out += '~';
    out += '~';
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((static_cast<long long>(n) >> shift) & 63));
  }
  int bit = 5;
  int cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) cur |= 1 << bit;
      if (--bit < 0) {
        out += static_cast<char>(63 + cur);
        cur = 0;
        bit = 5;
      }
    }
  if (bit != 5) out += static_cast<char>(63 + cur);
  return out;
}

inline Graph parse_graph6(const std::string& line, int max_order = kDefaultMaxParseOrder) {
  if (line.empty()) throw Error(Errc::malformed_header, "empty graph6 line");
  for (char c : line)
    if (c < 63 || c > 126)
      throw Error(Errc::byte_out_of_range, "graph6 byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))));
  size_t idx = 0;
  long long n = 0;
  if (line[0] != '~') {
    n = line[0] - 63;
    idx = 1;
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) throw Error(Errc::malformed_header, "truncated extended graph6 header");
    for (int b = 1; b <= 3; ++b) n = (n << 6) | (line[b] - 63);
    if (n < 63) throw Error(Errc::malformed_header, "non-minimal extended graph6 header");
    idx = 4;
  } else {
    if (line.size() < 8) throw Error(Errc::malformed_header, "truncated extended graph6 header");
    for (int b = 2; b <= 7; ++b) n = (n << 6) | (line[b] - 63);
    if (n < 258048) throw Error(Errc::malformed_header, "non-minimal extended graph6 header");
    idx = 8;
  }
  if (n == 0) throw Error(Errc::malformed_header, "graph6 order 0 not supported");
  if (n > max_order)
    throw Error(Errc::order_above_cap, "graph6 order " + std::to_string(n) + " exceeds configured maximum " +
                                           std::to_string(max_order));
  long long pairs = n * (n - 1) / 2;
  long long body = (pairs + 5) / 6;
  if (static_cast<long long>(line.size()) - static_cast<long long>(idx) != body)
    throw Error(Errc::malformed_header, "graph6 body holds " + std::to_string(line.size() - idx) +
                                            " bytes, expected " + std::to_string(body));
  std::vector<Edge> edges;
  long long q = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++q) {
      int byte = line[idx + q / 6] - 63;
      if ((byte >> (5 - q % 6)) & 1) edges.emplace_back(i, j);
    }
  if (pairs % 6 != 0) {
    int pad = static_cast<int>(6 - pairs % 6);
    int last = line.back() - 63;
    if (last & ((1 << pad) - 1)) throw Error(Errc::trailing_bits, "nonzero padding in final graph6 byte");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

// Edge-list text: header "n m", then m lines "u v" (0-based). The writer is
// canonical: u < v within an edge, edges sorted lexicographically, newline
// separated with no trailing newline.
inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size());
  for (auto [u, v] : g.edge_list()) out += "\n" + std::to_string(u) + " " + std::to_string(v);
  return out;
}

namespace detail {

inline long long parse_int_token(std::istream& in, const char* what) {
  long long v;
  if (!(in >> v)) throw Error(Errc::count_mismatch, std::string("expected ") + what);
  return v;
}

}  // namespace detail

inline Graph parse_edge_list(const std::string& text, int max_order = kDefaultMaxParseOrder) {
  std::istringstream in(text);
  long long n = detail::parse_int_token(in, "order");
  long long m = detail::parse_int_token(in, "edge count");
  if (n < 1 || n > max_order) throw Error(Errc::bad_parameter, "edge-list order " + std::to_string(n));
  if (m < 0) throw Error(Errc::bad_parameter, "negative edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long e = 0; e < m; ++e) {
    long long u = detail::parse_int_token(in, "edge endpoint");
    long long v = detail::parse_int_token(in, "edge endpoint");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw Error(Errc::count_mismatch, "trailing content after " + std::to_string(m) + " edges");
  return Graph::from_edges(static_cast<int>(n), edges);
}

enum class CatalogFormat { graph6, edge_list_multi };
enum class ErrorPolicy { abort, skip };

struct CatalogEntry {
  long long index = 0;        // ordinal within the stream, counting from 0
  Graph graph;
  long long byte_offset = 0;  // where this entry's text began
};

struct CatalogDiagnostic {
  long long byte_offset = 0;
  std::string message;
};

// Streaming decoder over a catalog of graphs. graph6 catalogs are one line
// per graph (blank lines and a leading ">>graph6<<" banner are tolerated);
// edge-list-multi catalogs are whitespace-separated "n m u v u v ..."
// records with '#' comments to end of line. Decoding is sequential; under
// ErrorPolicy::skip malformed entries become diagnostics, under abort they
// throw with their byte offset.
class CatalogReader {
 public:
  CatalogReader(std::istream& in, CatalogFormat format, ErrorPolicy policy = ErrorPolicy::abort,
                int max_order = kDefaultMaxParseOrder)
      : in_(in), format_(format), policy_(policy), max_order_(max_order) {}

  std::optional<CatalogEntry> next() {
    for (;;) {
      auto raw = format_ == CatalogFormat::graph6 ? next_graph6_raw() : next_edge_list_raw();
      if (!raw) return std::nullopt;
      try {
        Graph g = format_ == CatalogFormat::graph6 ? parse_graph6(raw->text, max_order_)
                                                   : parse_edge_list(raw->text, max_order_);
        return CatalogEntry{index_++, std::move(g), raw->offset};
      } catch (const Error& e) {
        if (policy_ == ErrorPolicy::abort)
          throw Error(e.code(), std::string(e.what()) + " (catalog byte " + std::to_string(raw->offset) + ")");
        diagnostics_.push_back({raw->offset, e.what()});
      }
    }
  }

  const std::vector<CatalogDiagnostic>& diagnostics() const { return diagnostics_; }
  long long entries_decoded() const { return index_; }

 private:
  struct RawEntry {
    std::string text;
    long long offset;
  };

  std::optional<RawEntry> next_graph6_raw() {
    std::string line;
    while (true) {
      long long offset = consumed_;
      if (!std::getline(in_, line)) {
        if (in_.bad()) throw Error(Errc::io_failure, "catalog read failed at byte " + std::to_string(consumed_));
        return std::nullopt;
      }
      consumed_ += static_cast<long long>(line.size()) + 1;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
      size_t start = line.find_first_not_of(" \t");
      if (start == std::string::npos) continue;
      std::string body = line.substr(start);
      if (body.rfind(">>graph6<<", 0) == 0) body = body.substr(10);
      if (body.empty()) continue;
      return RawEntry{body, offset + static_cast<long long>(start)};
    }
  }

  // Reads one whitespace-delimited integer token, skipping '#' comments.
  // Returns nullopt at clean EOF.
  std::optional<std::string> next_token(long long* token_offset) {
    std::string tok;
    int c;
    while ((c = in_.get()) != EOF) {
      ++consumed_;
      if (c == '#') {
        while ((c = in_.get()) != EOF) {
          ++consumed_;
          if (c == '\n') break;
        }
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
      break;
    }
    if (c == EOF) {
      if (in_.bad()) throw Error(Errc::io_failure, "catalog read failed at byte " + std::to_string(consumed_));
      return std::nullopt;
    }
    *token_offset = consumed_ - 1;
    tok += static_cast<char>(c);
    while ((c = in_.get()) != EOF) {
      ++consumed_;
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') break;
      tok += static_cast<char>(c);
    }
    return tok;
  }

  std::optional<RawEntry> next_edge_list_raw() {
    long long offset = 0;
    auto first = next_token(&offset);
    if (!first) return std::nullopt;
    long long record_offset = offset;
    std::string text = *first;
    long long dummy = 0;
    auto need = [&](const char* what) {
      auto t = next_token(&dummy);
      if (!t)
        throw Error(Errc::count_mismatch,
                    std::string("catalog ended inside a record (") + what + " missing) at byte " +
                        std::to_string(consumed_));
      text += " " + *t;
      return *t;
    };
    need("edge count");
    long long m = 0;
    try {
      m = std::stoll(text.substr(text.find(' ') + 1));
    } catch (...) {
      m = -1;
    }
    if (m < 0 || m > 10000000) {
      // Unparseable record shape; cannot resync reliably, so this aborts
      // regardless of policy.
      throw Error(Errc::count_mismatch, "unreadable edge-list record header at byte " + std::to_string(record_offset));
    }
    for (long long e = 0; e < 2 * m; ++e) need("edge endpoint");
    return RawEntry{text, record_offset};
  }

  std::istream& in_;
  CatalogFormat format_;
  ErrorPolicy policy_;
  int max_order_;
  long long index_ = 0;
  long long consumed_ = 0;
  std::vector<CatalogDiagnostic> diagnostics_;
};

}  // namespace fcut
