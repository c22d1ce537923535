#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "symbreak/isomorphism.hpp"
#include "symbreak/products.hpp"

using namespace symbreak;

namespace {

Graph shuffled_copy(const Graph& g, std::mt19937& rng) {
  int n = g.vertex_count();
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(relabel[u], relabel[v]);
  return out;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("known pairs") {
  CHECK(are_isomorphic(cycle_graph(4), complete_bipartite_graph(2, 2)));
  CHECK(!are_isomorphic(path_graph(4), star_graph(3)));
  CHECK(are_isomorphic(kronecker(path_graph(3), path_graph(3)),
                       disjoint_union(star_graph(4), cycle_graph(4))));
  CHECK(!are_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
}

TEST_CASE("witness is a real isomorphism") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(8, 0.45, rng);
    Graph h = shuffled_copy(g, rng);
    auto iso = find_isomorphism(g, h);
    REQUIRE(iso.has_value());
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v) CHECK(g.has_edge(u, v) == h.has_edge((*iso)[u], (*iso)[v]));
  }
}

TEST_CASE("agreement with brute force on small graphs") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    Graph a = random_graph(6, 0.5, rng);
    Graph b = trial % 3 == 0 ? shuffled_copy(a, rng) : random_graph(6, 0.5, rng);
    CHECK(are_isomorphic(a, b) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("size cap") {
  Graph big(17);
  try {
    are_isomorphic(big, big);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::size_cap_exceeded);
  }
  CHECK(are_isomorphic(big, big, 17));
}

TEST_CASE("equivalence relation spot checks") {
  std::mt19937 rng(41);
  std::vector<Graph> sample;
  for (int i = 0; i < 6; ++i) sample.push_back(random_graph(6, 0.4, rng));
  for (const auto& g : sample) CHECK(are_isomorphic(g, g));  // reflexive
  for (const auto& a : sample)
    for (const auto& b : sample) CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));  // symmetric
  for (const auto& a : sample)
    for (const auto& b : sample)
      for (const auto& c : sample)
        if (are_isomorphic(a, b) && are_isomorphic(b, c)) CHECK(are_isomorphic(a, c));
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
  std::mt19937 rng(43);
  std::vector<Graph> sample;
  for (int i = 0; i < 20; ++i) sample.push_back(random_graph(5, 0.5, rng));
  for (const auto& a : sample)
    for (const auto& b : sample)
      CHECK((canonical_form(a) == canonical_form(b)) == are_isomorphic(a, b));

  // shuffles never change the form
  for (int i = 0; i < 10; ++i) {
    Graph g = random_graph(7, 0.4, rng);
    CHECK(canonical_form(g) == canonical_form(shuffled_copy(g, rng)));
  }
}
