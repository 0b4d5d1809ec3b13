#include <algorithm>
#include <random>

#include "alpharad/graph.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace alpharad;

TEST_CASE("complete graph") {
  CHECK(complete_graph(0).order() == 0);
  CHECK(complete_graph(1).order() == 1);
  CHECK(complete_graph(1).size() == 0);
  const Graph k4 = complete_graph(4);
  CHECK(k4.size() == 6);
  for (Vertex v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
}

TEST_CASE("disjoint union") {
  const Graph g = disjoint_union(complete_graph(3), empty_graph(2));
  CHECK(g.order() == 5);
  CHECK(g.size() == 3);
  CHECK(disjoint_union(empty_graph(1), empty_graph(1)) == empty_graph(2));

  const Graph h = disjoint_union(complete_graph(5), empty_graph(3));
  CHECK(h.order() == 8);
  CHECK(h.size() == 10);
  CHECK_FALSE(h.has_edge(4, 5));
  CHECK(h.has_edge(0, 4));
}

TEST_CASE("join") {
  const Graph star = join(complete_graph(1), empty_graph(3));
  auto d = star.degrees();
  CHECK(d == std::vector<std::size_t>{3, 1, 1, 1});

  // K_2 v complement(K_4): two vertices of degree n-1, four of degree beta.
  const Graph split = join(complete_graph(2), empty_graph(4));
  CHECK(split.degrees() == std::vector<std::size_t>{5, 5, 2, 2, 2, 2});

  // K_1 v (K_3 u complement(K_2)) at s=1, beta=2, n=6.
  const Graph core_plus = join(complete_graph(1), disjoint_union(complete_graph(3), empty_graph(2)));
  CHECK(core_plus.order() == 6);
  CHECK(core_plus.size() == 5 + 3);
  CHECK(core_plus.has_edge(1, 2));
  CHECK(core_plus.has_edge(2, 3));
  CHECK_FALSE(core_plus.has_edge(3, 4));

  // Order-0 graphs are identities.
  CHECK(join(Graph(0), complete_graph(3)) == complete_graph(3));
  CHECK(disjoint_union(complete_graph(3), Graph(0)) == complete_graph(3));
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(5)) == empty_graph(5));
  const Graph c5 = cycle_graph(5);
  const Graph cc = complement(c5);
  // The complement of the 5-cycle 0-1-2-3-4 is the 5-cycle 0-2-4-1-3.
  for (auto [u, v] : std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}) {
    CHECK(cc.has_edge(u, v));
  }
  CHECK(cc.size() == 5);
  CHECK(complement(cc) == c5);
}

TEST_CASE("components") {
  const auto parts = components(disjoint_union(complete_graph(5), empty_graph(3)));
  REQUIRE(parts.components.size() == 4);
  CHECK(parts.components[0].size() == 5);
  CHECK(parts.odd_count == 4);
  CHECK(parts.even_count == 0);

  CHECK(components(complete_graph(6)).components.size() == 1);

  Graph p4 = path_graph(4);
  p4.remove_edge(1, 2);
  const auto halves = components(p4);
  CHECK(halves.components.size() == 2);
  CHECK(halves.odd_count == 0);
  CHECK(halves.even_count == 2);

  CHECK(components(Graph(0)).components.empty());
}

TEST_CASE("induced subgraph") {
  CHECK(induced_subgraph(complete_graph(4), std::vector<Vertex>{}).order() == 0);
  CHECK(induced_subgraph(complete_graph(5), std::vector<Vertex>{0, 2, 4}) == complete_graph(3));
  const Graph star = testing::star_graph(3);
  CHECK(induced_subgraph(star, std::vector<Vertex>{1, 2, 3}) == empty_graph(3));
  CHECK_THROWS_AS(induced_subgraph(star, std::vector<Vertex>{0, 7}), std::out_of_range);
  CHECK_THROWS_AS(induced_subgraph(star, std::vector<Vertex>{1, 1}), std::invalid_argument);
}

TEST_CASE("mutators reject bad input") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("graphs wider than one word") {
  Graph g = complete_graph(70);
  CHECK(g.words_per_row() == 2);
  CHECK(g.size() == 70 * 69 / 2);
  CHECK(g.degree(69) == 69);
  g.remove_edge(3, 68);
  CHECK_FALSE(g.has_edge(68, 3));
  CHECK(g.degree(68) == 68);
}

TEST_CASE("properties on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 15;
    const Graph g = testing::random_graph(n, 0.3 + 0.4 * (trial % 3) / 2.0, rng);
    const Graph h = testing::random_graph(1 + trial % 5, 0.5, rng);

    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
      degree_sum += g.degree(v);
      CHECK_FALSE(g.has_edge(v, v));
      for (Vertex u = 0; u < n; ++u) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    }
    CHECK(degree_sum == 2 * g.size());
    CHECK(complement(complement(g)) == g);
    CHECK(join(g, h).size() == g.size() + h.size() + g.order() * h.order());

    // Components are internally connected and pairwise non-adjacent.
    const auto parts = components(g);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < parts.components.size(); ++i) {
      covered += parts.components[i].size();
      CHECK(is_connected(induced_subgraph(g, parts.components[i])));
      for (std::size_t j = i + 1; j < parts.components.size(); ++j)
        for (Vertex a : parts.components[i])
          for (Vertex b : parts.components[j]) CHECK_FALSE(g.has_edge(a, b));
    }
    CHECK(covered == n);
    CHECK(parts.odd_count + parts.even_count == parts.components.size());
  }
}
