#include <random>
#include <sstream>

#include "alpharad/graph_io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace alpharad;

TEST_CASE("graph6 decode by hand") {
  // 'D' = 63 + 5; payload '?' = 000000, '{' = 111100. In column order the
  // set bits are (0,4) (1,4) (2,4) (3,4): the star centred at vertex 4.
  const Graph g = parse_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(g.size() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(g.has_edge(v, 4));
  CHECK(to_graph6(g) == "D?{");
}

TEST_CASE("graph6 small cases") {
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(parse_graph6("@").order() == 1);
  CHECK(parse_graph6("?").order() == 0);
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(parse_graph6("A_\n") == complete_graph(2));
}

TEST_CASE("graph6 long header") {
  const Graph g = path_graph(63);
  const std::string text = to_graph6(g);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == g);
}

TEST_CASE("graph6 errors carry offsets") {
  try {
    parse_graph6("D?");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_graph6("D? {");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_graph6("D?{{"), ParseError);
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("~?"), ParseError);
  // K_2 with a padding bit set.
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = testing::random_graph(static_cast<std::size_t>(i % 13), 0.45, rng);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 stream") {
  std::istringstream in(">>graph6<<D?{\n\nA_\n@\n");
  auto graphs = read_graph6_stream(in);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[1] == complete_graph(2));
  std::istringstream bad("A_\nA!\n");
  CHECK_THROWS_AS(read_graph6_stream(bad), ParseError);
}

TEST_CASE("edge list") {
  const Graph g = parse_edge_list("# K_{1,3}\n4 3\n0 1\n\n0 2  # comment\n0 3\n");
  CHECK(g == testing::star_graph(3));
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  CHECK(parse_edge_list("3 0\n") == Graph(3));

  try {
    parse_edge_list("3 2\n0 1\n1 5\n");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
}
