#include <random>

#include "doctest.h"
#include "symbreak/graph_io.hpp"
#include "symbreak/isomorphism.hpp"

using namespace symbreak;

TEST_CASE("edgelist parse") {
  CHECK(parse_graph("2 1\n0 1\n", GraphFormat::edgelist) == complete_graph(2));
  CHECK(parse_graph("3 3\n0 1\n1 2\n0 2\n", GraphFormat::edgelist) == complete_graph(3));

  SUBCASE("round trip is byte exact for canonical inputs") {
    std::string text = "4 3\n0 1\n1 2\n2 3\n";
    CHECK(serialize_graph(parse_graph(text, GraphFormat::edgelist), GraphFormat::edgelist) == text);
  }
  SUBCASE("errors carry positions") {
    try {
      parse_graph("2 1\n0 5\n", GraphFormat::edgelist);
      CHECK(false);
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(parse_graph("x", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n1 1\n", GraphFormat::edgelist), ParseError);
  }
}

TEST_CASE("graph6 known encodings") {
  // K_2 is "A_", K_4 is "C~"
  CHECK(parse_graph("A_", GraphFormat::graph6) == complete_graph(2));
  CHECK(serialize_graph(complete_graph(2), GraphFormat::graph6) == "A_");
  CHECK(serialize_graph(complete_graph(4), GraphFormat::graph6) == "C~");
  CHECK(parse_graph("C~", GraphFormat::graph6) == complete_graph(4));
  CHECK(parse_graph(">>graph6<<A_", GraphFormat::graph6) == complete_graph(2));

  SUBCASE("invalid bytes rejected") {
    CHECK_THROWS_AS(parse_graph("A\x01", GraphFormat::graph6), ParseError);
    CHECK_THROWS_AS(parse_graph("", GraphFormat::graph6), ParseError);
  }
}

TEST_CASE("graph6 round trips") {
  std::mt19937 rng(23);
  std::bernoulli_distribution coin(0.4);
  for (int n : {0, 1, 2, 5, 9, 20, 63, 64, 70}) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    std::string enc = serialize_graph(g, GraphFormat::graph6);
    CHECK(parse_graph(enc, GraphFormat::graph6) == g);
    CHECK(parse_graph(enc, sniff_format(enc)) == g);
  }
}

TEST_CASE("edgelist and graph6 agree") {
  std::mt19937 rng(29);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g(7);
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        if (coin(rng)) g.add_edge(u, v);
    Graph via_edgelist = parse_graph(serialize_graph(g, GraphFormat::edgelist), GraphFormat::edgelist);
    Graph via_g6 = parse_graph(serialize_graph(g, GraphFormat::graph6), GraphFormat::graph6);
    CHECK(via_edgelist == via_g6);
  }
}
