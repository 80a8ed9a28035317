#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "fcut/generators.hpp"
#include "fcut/io.hpp"
#include "oracles.hpp"

using namespace fcut;

static bool same_labeled_graph(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_list() == b.edge_list();
}

TEST_CASE("graph6 writer: hand-checked encodings") {
  CHECK(write_graph6(complete(4)) == "C~");
  CHECK(write_graph6(complete(1)) == "@");
  CHECK(write_graph6(path(3)) == "Bg");
  CHECK(write_graph6(cycle(5)) == "Dhc");
  CHECK(write_graph6(cycle(6)) == "EhEG");
  CHECK(write_graph6(complete(5)) == "D~{");
  CHECK(write_graph6(k5_minus_e()) == "D~w");
  CHECK(write_graph6(octahedron()) == "EznW");
  CHECK(write_graph6(complete_bipartite(3, 3)) == "EFz_");
  CHECK(write_graph6(k_triangle(3)) == "E~z_");
  CHECK(write_graph6(king_grid(3, 3)) == "Hm|go{L");
}

TEST_CASE("graph6 round trip preserves labeled graphs") {
  std::vector<Graph> subjects = {complete(1),
                                 complete(2),
                                 complete(8),
                                 path(7),
                                 cycle(12),
                                 petersen(),
                                 octahedron(),
                                 k_triangle(5),
                                 king_grid(3, 4),
                                 k4_blowup(petersen()),
                                 octa_blowup(complete(5), BlowupPolicy::four_external),
                                 circulant(62, {1, 4}),    // largest short-header order
                                 circulant(63, {1, 5}),    // smallest extended-header order
                                 circulant(100, {1, 2, 7})};
  for (const Graph& g : subjects) {
    std::string s = write_graph6(g);
    Graph back = parse_graph6(s);
    REQUIRE(same_labeled_graph(g, back));
    CHECK(write_graph6(back) == s);
  }
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(oracles::test_seed());
  for (int n = 2; n <= 30; n += 3)
    for (int trial = 0; trial < 10; ++trial) {
      Graph g = oracles::random_connected_graph(n, rng);
      CHECK(same_labeled_graph(g, parse_graph6(write_graph6(g))));
    }
}

TEST_CASE("reference catalog: write(parse(line)) is byte-identical") {
  std::ifstream in(FCUT_DATA_DIR "/reference.g6");
  REQUIRE(in.good());
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Graph g = parse_graph6(line);
    CHECK(write_graph6(g) == line);
    ++checked;
  }
  CHECK(checked == 18);
}

TEST_CASE("reference catalog entries match their constructions") {
  std::ifstream in(FCUT_DATA_DIR "/reference.g6");
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  REQUIRE(lines.size() == 18);
  CHECK(same_labeled_graph(parse_graph6(lines[0]), complete(4)));
  CHECK(same_labeled_graph(parse_graph6(lines[1]), complete(1)));
  CHECK(same_labeled_graph(parse_graph6(lines[2]), path(3)));
  CHECK(same_labeled_graph(parse_graph6(lines[3]), cycle(5)));
  CHECK(same_labeled_graph(parse_graph6(lines[4]), cycle(6)));
  // an independently labeled Petersen: same invariants, not same labels
  Graph pet = parse_graph6(lines[5]);
  CHECK(pet.order() == 10);
  CHECK(pet.size() == 15);
  CHECK(pet.is_regular(3));
  CHECK(oracles::is_isomorphic_brute(parse_graph6(lines[6]), octahedron()));
  CHECK(same_labeled_graph(parse_graph6(lines[7]), complete(5)));
  Graph blowup = parse_graph6(lines[8]);
  CHECK(blowup.order() == 40);
  CHECK(blowup.size() == 75);
  CHECK(same_labeled_graph(blowup, k4_blowup(petersen())));
  CHECK(same_labeled_graph(parse_graph6(lines[9]), complete_bipartite(3, 3)));
  CHECK(same_labeled_graph(parse_graph6(lines[10]), king_grid(3, 3)));
  CHECK(same_labeled_graph(parse_graph6(lines[11]), k_triangle(3)));
  // the prism is labeled differently upstream; isomorphic is the claim
  CHECK(oracles::is_isomorphic_brute(parse_graph6(lines[12]), circular_ladder(4)));
  CHECK(parse_graph6(lines[16]).order() == 63);
  CHECK(parse_graph6(lines[17]).order() == 100);
}

TEST_CASE("graph6 parse errors") {
  auto code_of = [](const std::string& s, int max_order = kDefaultMaxParseOrder) {
    try {
      parse_graph6(s, max_order);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io_failure;  // sentinel for "did not throw"
  };
  CHECK(code_of("") == Errc::malformed_header);
  CHECK(code_of("?") == Errc::malformed_header);      // order 0
  CHECK(code_of("C") == Errc::malformed_header);      // body missing
  CHECK(code_of("C~~") == Errc::malformed_header);    // body too long
  CHECK(code_of("Bh") == Errc::trailing_bits);        // nonzero padding
  CHECK(code_of("C!") == Errc::byte_out_of_range);
  CHECK(code_of("C\x7f") == Errc::byte_out_of_range);
  CHECK(code_of("~?") == Errc::malformed_header);     // truncated 18-bit header
  CHECK(code_of("~??Bg") == Errc::malformed_header);  // non-minimal: 3 fits one byte
  CHECK(code_of("~~???") == Errc::malformed_header);  // truncated 36-bit header
  CHECK(code_of("~~??????") == Errc::malformed_header);  // non-minimal 36-bit
  CHECK(code_of("EhEG", 5) == Errc::order_above_cap);
  // valid lines stay valid
  CHECK(parse_graph6("Bg").size() == 2);
}

TEST_CASE("edge list writer and parser") {
  CHECK(write_edge_list(path(3)) == "3 2\n0 1\n1 2");
  CHECK(write_edge_list(complete(1)) == "1 0");
  Graph p3 = parse_edge_list("3 2\n0 1\n1 2");
  CHECK(same_labeled_graph(p3, path(3)));
  // whitespace shape is free-form
  CHECK(same_labeled_graph(parse_edge_list("3 2 0 1 1 2"), path(3)));
  CHECK(same_labeled_graph(parse_edge_list(" 3\n2\n1 2 0 1 "), path(3)));
  for (const Graph& g : {complete(6), petersen(), king_grid(2, 3)})
    CHECK(same_labeled_graph(parse_edge_list(write_edge_list(g)), g));

  auto code_of = [](const std::string& s) {
    try {
      parse_edge_list(s);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io_failure;
  };
  CHECK(code_of("") == Errc::count_mismatch);
  CHECK(code_of("3") == Errc::count_mismatch);
  CHECK(code_of("3 2\n0 1") == Errc::count_mismatch);      // edge missing
  CHECK(code_of("3 1\n0 1 7") == Errc::count_mismatch);    // trailing token
  CHECK(code_of("0 0") == Errc::bad_parameter);
  CHECK(code_of("3 -1") == Errc::bad_parameter);
  CHECK(code_of("2 1\n0 0") == Errc::loop_edge);
  CHECK(code_of("2 1\n0 5") == Errc::endpoint_out_of_range);
  CHECK(code_of("2 2\n0 1\n1 0") == Errc::duplicate_edge);
}

TEST_CASE("catalog reader: graph6 stream") {
  std::istringstream in(">>graph6<<C~\n\nBg\n   EhEG  \n");
  CatalogReader reader(in, CatalogFormat::graph6);
  auto e0 = reader.next();
  REQUIRE(e0.has_value());
  CHECK(e0->index == 0);
  CHECK(same_labeled_graph(e0->graph, complete(4)));
  auto e1 = reader.next();
  REQUIRE(e1.has_value());
  CHECK(same_labeled_graph(e1->graph, path(3)));
  CHECK(e1->byte_offset > e0->byte_offset);
  auto e2 = reader.next();
  REQUIRE(e2.has_value());
  CHECK(same_labeled_graph(e2->graph, cycle(6)));
  CHECK(!reader.next().has_value());
  CHECK(!reader.next().has_value());  // stays exhausted
  CHECK(reader.entries_decoded() == 3);
  CHECK(reader.diagnostics().empty());
}

TEST_CASE("catalog reader: empty and blank streams") {
  std::istringstream empty("");
  CatalogReader r1(empty, CatalogFormat::graph6);
  CHECK(!r1.next().has_value());
  CHECK(r1.entries_decoded() == 0);
  std::istringstream blanks("\n  \n\t\n");
  CatalogReader r2(blanks, CatalogFormat::graph6);
  CHECK(!r2.next().has_value());
}

TEST_CASE("catalog reader: abort policy carries byte offsets") {
  std::istringstream in("C~\nBh\nBg\n");
  CatalogReader reader(in, CatalogFormat::graph6, ErrorPolicy::abort);
  REQUIRE(reader.next().has_value());
  try {
    reader.next();
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::trailing_bits);
    CHECK(std::string(e.what()).find("catalog byte 3") != std::string::npos);
  }
}

TEST_CASE("catalog reader: skip policy records diagnostics") {
  std::istringstream in("C~\nBh\nBg\nC!\nD~{\n");
  CatalogReader reader(in, CatalogFormat::graph6, ErrorPolicy::skip);
  std::vector<Graph> got;
  while (auto e = reader.next()) got.push_back(e->graph);
  REQUIRE(got.size() == 3);
  CHECK(same_labeled_graph(got[0], complete(4)));
  CHECK(same_labeled_graph(got[1], path(3)));
  CHECK(same_labeled_graph(got[2], complete(5)));
  REQUIRE(reader.diagnostics().size() == 2);
  CHECK(reader.diagnostics()[0].byte_offset == 3);
  CHECK(reader.diagnostics()[1].byte_offset == 9);
}

TEST_CASE("catalog reader: max order plumbs through") {
  std::istringstream in("C~\nEhEG\n");
  CatalogReader reader(in, CatalogFormat::graph6, ErrorPolicy::skip, 4);
  std::vector<Graph> got;
  while (auto e = reader.next()) got.push_back(e->graph);
  CHECK(got.size() == 1);
  REQUIRE(reader.diagnostics().size() == 1);
}

TEST_CASE("catalog reader: edge list records") {
  std::istringstream in("3 2 0 1 1 2\n# a comment line\n2 1 0 1\n1 0 # trailing comment\n");
  CatalogReader reader(in, CatalogFormat::edge_list_multi);
  auto e0 = reader.next();
  REQUIRE(e0.has_value());
  CHECK(same_labeled_graph(e0->graph, path(3)));
  auto e1 = reader.next();
  REQUIRE(e1.has_value());
  CHECK(same_labeled_graph(e1->graph, complete(2)));
  auto e2 = reader.next();
  REQUIRE(e2.has_value());
  CHECK(e2->graph.order() == 1);
  CHECK(!reader.next().has_value());
}

TEST_CASE("catalog reader: edge list skip policy resyncs on record boundaries") {
  // middle record has a loop; its frame is still consumed as one record
  std::istringstream in("3 2 0 1 1 2  2 1 0 0  2 1 0 1");
  CatalogReader reader(in, CatalogFormat::edge_list_multi, ErrorPolicy::skip);
  std::vector<Graph> got;
  while (auto e = reader.next()) got.push_back(e->graph);
  REQUIRE(got.size() == 2);
  CHECK(same_labeled_graph(got[0], path(3)));
  CHECK(same_labeled_graph(got[1], complete(2)));
  REQUIRE(reader.diagnostics().size() == 1);
}

TEST_CASE("catalog reader: unreadable edge list header aborts even under skip") {
  std::istringstream in("1 x 0 1");
  CatalogReader reader(in, CatalogFormat::edge_list_multi, ErrorPolicy::skip);
  CHECK_THROWS_MATCHES(reader.next(), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::count_mismatch;
                       }));
  std::istringstream in2("3 2 0 1");
  CatalogReader reader2(in2, CatalogFormat::edge_list_multi, ErrorPolicy::skip);
  CHECK_THROWS_AS(reader2.next(), Error);
}
