#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "symbreak/automorphisms.hpp"
#include "symbreak/products.hpp"

using namespace symbreak;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph paw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("orders of standard graphs") {
  CHECK(automorphism_group(path_graph(3)).order == 2);
  CHECK(automorphism_group(complete_graph(4)).order == 24);
  CHECK(automorphism_group(cycle_graph(5)).order == 10);
  CHECK(automorphism_group(star_graph(4)).order == 24);
  CHECK(automorphism_group(complete_bipartite_graph(3, 3)).order == 72);
  CHECK(automorphism_group(empty_graph(5)).order == 120);
  CHECK(automorphism_group(paw()).order == 2);
  CHECK(automorphism_group(kronecker(complete_graph(3), complete_graph(3))).order == 72);
}

TEST_CASE("soundness and completeness against the n! oracle") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + trial % 5;  // up to 7
    Graph g = random_graph(n, 0.3 + 0.05 * (trial % 8), rng);
    auto expected = oracle::all_automorphisms(g);
    AutomorphismGroup aut = automorphism_group(g);
    REQUIRE(aut.enumerated);
    REQUIRE(aut.order == expected.size());
    std::set<std::vector<int>> mine;
    for (const auto& p : aut.elements) {
      CHECK(is_automorphism(g, p));
      mine.insert(p.image());
    }
    CHECK(mine.size() == expected.size());
    for (const auto& p : expected) CHECK(mine.count(p));
  }
}

TEST_CASE("one 8-vertex completeness check") {
  Graph g = disjoint_union(cycle_graph(4), complete_graph(4));
  AutomorphismGroup aut = automorphism_group(g);
  CHECK(aut.order == oracle::all_automorphisms(g).size());
}

TEST_CASE("identity first, deterministic, closed under composition") {
  Graph g = cycle_graph(6);
  AutomorphismGroup a = automorphism_group(g);
  AutomorphismGroup b = automorphism_group(g);
  REQUIRE(a.enumerated);
  CHECK(a.elements[0].is_identity());
  CHECK(a.elements == b.elements);
  std::set<Permutation> all(a.elements.begin(), a.elements.end());
  for (size_t i = 0; i < a.elements.size(); i += 3)
    for (size_t j = 0; j < a.elements.size(); j += 5)
      CHECK(all.count(a.elements[i].then(a.elements[j])));
}

TEST_CASE("complement has the same group") {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(6, 0.5, rng);
    CHECK(automorphism_group(g).order == automorphism_group(complement(g)).order);
  }
}

TEST_CASE("vertex cap and enumeration cap") {
  Graph big(33);
  try {
    automorphism_group(big);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::size_cap_exceeded);
  }
  // 8 disjoint K_2: order 8! * 2^8 = 10321920, far above the cap
  AutomorphismGroup aut = automorphism_group(matching_graph(8), AutOptions{16, 1'000'000});
  CHECK(aut.order == 10321920);
  CHECK(!aut.enumerated);
  CHECK(aut.elements.empty());
  CHECK(!aut.generators.empty());
  for (const auto& gen : aut.generators) CHECK(is_automorphism(matching_graph(8), gen));
}

TEST_CASE("factor pairs embed into the product group") {
  Graph g = complete_graph(3), h = paw();
  Graph prod = kronecker(g, h);
  AutomorphismGroup ag = automorphism_group(g), ah = automorphism_group(h);
  int nh = h.vertex_count();
  for (const auto& alpha : ag.elements)
    for (const auto& beta : ah.elements) {
      std::vector<int> img(prod.vertex_count());
      for (int u = 0; u < g.vertex_count(); ++u)
        for (int x = 0; x < nh; ++x) img[u * nh + x] = alpha(u) * nh + beta(x);
      CHECK(is_automorphism(prod, Permutation(std::move(img))));
    }
  // connected non-bipartite R-thin relatively prime: orders multiply
  AutomorphismGroup ap = automorphism_group(prod, AutOptions{16, 1'000'000});
  CHECK(ap.order == ag.order * ah.order);
  CHECK(ap.order % (ag.order * ah.order) == 0);
}

TEST_CASE("colored groups") {
  Graph c6 = cycle_graph(6);
  CHECK(automorphism_group_colored(c6, {1, 1, 1, 1, 1, 1}).order == 12);
  CHECK(automorphism_group_colored(c6, {1, 2, 1, 1, 1, 1}).order == 2);
  CHECK(automorphism_group_colored(c6, {1, 2, 2, 1, 1, 2}).order == 1);
}

TEST_CASE("edge permutations and edge action") {
  Graph p4 = path_graph(4);
  AutomorphismGroup aut = automorphism_group(p4);
  REQUIRE(aut.order == 2);
  const Permutation& rev = aut.elements[1];
  auto ep = edge_permutation(p4, rev);
  CHECK(ep == std::vector<int>{2, 1, 0});
  CHECK(!acts_trivially_on_edges(p4, rev));

  // a K_2 flip acts trivially on edges
  Graph k2 = complete_graph(2);
  AutomorphismGroup k2aut = automorphism_group(k2);
  REQUIRE(k2aut.order == 2);
  CHECK(acts_trivially_on_edges(k2, k2aut.elements[1]));

  // edge action group of 8 K_2 collapses the flips: S_8 on the edges
  AutomorphismGroup maut = automorphism_group(matching_graph(8), AutOptions{16, 1'000'000});
  PermGroup eg = edge_action_group(matching_graph(8), maut);
  CHECK(eg.order() == 40320);
}

TEST_CASE("distinguishing vertex labelings") {
  Graph p3 = path_graph(3);
  AutomorphismGroup aut = automorphism_group(p3);
  CHECK(is_distinguishing_vertex_labeling(p3, aut, {{1, 1, 2}}));
  CHECK(!is_distinguishing_vertex_labeling(p3, aut, {{1, 2, 1}}));

  Graph c4 = cycle_graph(4);
  AutomorphismGroup c4aut = automorphism_group(c4);
  std::vector<int> labels(4);
  for (int mask = 0; mask < 16; ++mask) {
    for (int v = 0; v < 4; ++v) labels[v] = 1 + ((mask >> v) & 1);
    CHECK(!is_distinguishing_vertex_labeling(c4, c4aut, {labels}));
  }
}

TEST_CASE("distinguishing edge labelings") {
  Graph p4 = path_graph(4);
  AutomorphismGroup aut = automorphism_group(p4);
  CHECK(!is_distinguishing_edge_labeling(p4, aut, make_edge_labeling(p4, {1, 2, 1})));
  CHECK(is_distinguishing_edge_labeling(p4, aut, make_edge_labeling(p4, {1, 1, 2})));

  Graph star = star_graph(3);
  AutomorphismGroup saut = automorphism_group(star);
  CHECK(is_distinguishing_edge_labeling(star, saut, make_edge_labeling(star, {1, 2, 3})));
  CHECK(!is_distinguishing_edge_labeling(star, saut, make_edge_labeling(star, {1, 2, 2})));
  CHECK(!is_distinguishing_edge_labeling(star, saut, make_edge_labeling(star, {2, 1, 2})));

  // any labeling of a single K_2 is distinguishing: the flip never moves the edge
  Graph k2 = complete_graph(2);
  CHECK(is_distinguishing_edge_labeling(k2, automorphism_group(k2), make_edge_labeling(k2, {1})));

  SUBCASE("group must be enumerated") {
    Graph m8 = matching_graph(8);
    AutomorphismGroup maut = automorphism_group(m8, AutOptions{16, 1'000'000});
    try {
      is_distinguishing_edge_labeling(m8, maut, make_edge_labeling(m8, {1, 2, 3, 4, 5, 6, 7, 8}));
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == errc::group_not_enumerated);
    }
  }
}
