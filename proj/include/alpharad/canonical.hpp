#pragma once

#include <string>
#include <vector>

#include "alpharad/graph.hpp"

namespace alpharad {

/// Canonical labelling: `order[pos]` is the vertex of the input placed at
/// position `pos` of the canonical graph.
///
/// The canonical graph minimises the graph6 bit string (upper triangle,
/// column by column) over every labelling compatible with the ordered
/// partition produced by colour refinement started from degrees. Twin
/// vertices are interchangeable and only one of each twin class is branched
/// on. Requires order() <= 64.
struct CanonicalLabeling {
  std::vector<Vertex> order;
  Graph graph;
};

CanonicalLabeling canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace alpharad
