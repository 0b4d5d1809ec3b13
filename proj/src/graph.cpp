#include "alpharad/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace alpharad {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(n_));
  }
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  row_ptr(u)[v / 64] |= std::uint64_t{1} << (v % 64);
  row_ptr(v)[u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  row_ptr(u)[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  row_ptr(v)[u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {bits_.data() + v * words_, words_};
}

std::uint64_t Graph::row_mask(Vertex v) const {
  if (n_ > 64) throw std::logic_error("row_mask requires order <= 64");
  check_vertex(v);
  return bits_[v];
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  Graph g(n1 + g2.order());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  const std::size_t n1 = g1.order();
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < g2.order(); ++v) g.add_edge(u, n1 + v);
  return g;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph c(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

ComponentDecomposition components(const Graph& g) {
  const std::size_t n = g.order();
  ComponentDecomposition out;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> part;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(part.begin(), part.end());
    if (part.size() % 2 == 1) {
      ++out.odd_count;
    } else {
      ++out.even_count;
    }
    out.components.push_back(std::move(part));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).components.size() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<bool> used(g.order(), false);
  for (Vertex v : keep) {
    if (v >= g.order()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                              std::to_string(g.order()));
    }
    if (used[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice");
    used[v] = true;
  }
  Graph h(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) h.add_edge(i, j);
  return h;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("permutation size mismatch");
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace alpharad
