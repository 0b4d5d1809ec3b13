#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "alpharad/canonical.hpp"
#include "alpharad/graph_io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace alpharad;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

// Minimum graph6 string over all n! labellings.
std::string brute_force_min(const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    auto s = to_graph6(relabel(g, perm));
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 10, 0.5, rng);
    CHECK(canonical_graph6(g) == canonical_graph6(shuffled(g, rng)));
  }
}

TEST_CASE("canonical graph is isomorphic to the input") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 7, 0.4, rng);
    auto lab = canonical_labeling(g);
    CHECK(lab.graph.size() == g.size());
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t j = 0; j < g.order(); ++j)
        CHECK(lab.graph.has_edge(i, j) == g.has_edge(lab.order[i], lab.order[j]));
  }
}

TEST_CASE("distinguishes non-isomorphic graphs") {
  // Same degree sequence (2,2,2,2,2,2): C_6 versus two triangles.
  const Graph c6 = cycle_graph(6);
  const Graph triangles = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK_FALSE(isomorphic(c6, triangles));
  CHECK(isomorphic(cycle_graph(5), complement(cycle_graph(5))));
  // Petersen graph, vertex-transitive with no twins.
  Graph petersen(10);
  for (Vertex i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  std::mt19937_64 rng(5);
  CHECK(isomorphic(petersen, shuffled(petersen, rng)));
}

TEST_CASE("canonical form separates classes exactly like brute force at order 5") {
  // Labelled graphs of order 5, grouped both ways, must give the same class count.
  std::set<std::string> canonical;
  std::set<std::string> brute;
  for (std::uint32_t mask = 0; mask < (1U << 10); ++mask) {
    Graph g(5);
    std::size_t k = 0;
    for (Vertex j = 1; j < 5; ++j)
      for (Vertex i = 0; i < j; ++i, ++k)
        if ((mask >> k) & 1U) g.add_edge(i, j);
    canonical.insert(canonical_graph6(g));
    brute.insert(brute_force_min(g));
  }
  CHECK(canonical.size() == 34);
  CHECK(brute.size() == 34);
}

TEST_CASE("large twin classes stay cheap") {
  const Graph g = join(complete_graph(20), empty_graph(40));
  std::mt19937_64 rng(6);
  CHECK(isomorphic(g, shuffled(g, rng)));
}
