#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace alpharad {

using Vertex = std::size_t;

/// Simple undirected graph on vertices 0..n-1 stored as bit rows.
///
/// Each row occupies ceil(n/64) machine words, so graphs with n <= 64 use a
/// single word per vertex. The adjacency relation is kept symmetric and
/// irreflexive by every mutator.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t size() const;

  bool has_edge(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex v) const;
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Raw row words for vertex v; bit (u % 64) of word (u / 64) is edge(v, u).
  std::span<const std::uint64_t> row(Vertex v) const;
  std::size_t words_per_row() const { return words_; }

  /// Row of v as a single word. Requires order() <= 64.
  std::uint64_t row_mask(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;
  std::uint64_t* row_ptr(Vertex v) { return bits_.data() + v * words_; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct ComponentDecomposition {
  std::vector<std::vector<Vertex>> components;  // ordered by smallest member
  std::size_t odd_count = 0;
  std::size_t even_count = 0;
};

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Vertices of g1 come first, then g2; every g1 vertex is joined to every g2 vertex.
Graph join(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);

ComponentDecomposition components(const Graph& g);
bool is_connected(const Graph& g);

/// G[keep], with kept vertices relabelled 0..|keep|-1 in the order given.
/// Throws std::out_of_range for an index >= g.order() and
/// std::invalid_argument for a repeated vertex.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Applies a relabelling: vertex v of g becomes perm[v] of the result.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace alpharad
