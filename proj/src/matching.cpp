#include "alpharad/matching.hpp"

#include <bit>
#include <deque>
#include <string>

namespace alpharad {
namespace {

constexpr Vertex kNone = kUnmatched;

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : n_(g.order()), adj_(n_), match_(n_, kNone), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
  }

  std::vector<Vertex> solve() {
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      Vertex v = find_augmenting_path(root);
      while (v != kNone) {
        Vertex pv = parent_[v];
        Vertex next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    return match_;
  }

 private:
  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          Vertex b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNone;
  }

  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

std::size_t best_matching(const std::vector<std::pair<Vertex, Vertex>>& edges, std::size_t i,
                          std::vector<bool>& busy) {
  if (i == edges.size()) return 0;
  std::size_t best = best_matching(edges, i + 1, busy);
  auto [u, v] = edges[i];
  if (!busy[u] && !busy[v]) {
    busy[u] = busy[v] = true;
    best = std::max(best, 1 + best_matching(edges, i + 1, busy));
    busy[u] = busy[v] = false;
  }
  return best;
}

}  // namespace

std::vector<Vertex> maximum_matching(const Graph& g) { return Blossom(g).solve(); }

std::size_t matching_number(const Graph& g) {
  std::size_t matched = 0;
  for (Vertex m : maximum_matching(g))
    if (m != kUnmatched) ++matched;
  return matched / 2;
}

std::size_t matching_number_oracle(const Graph& g) {
  auto edges = g.edges();
  if (edges.size() > kOracleEdgeCap) {
    throw CapExceeded("matching oracle: " + std::to_string(edges.size()) + " edges exceeds cap of " +
                      std::to_string(kOracleEdgeCap));
  }
  // Branches that would put two edges on one vertex are cut; every other
  // edge subset is visited.
  std::vector<bool> busy(g.order(), false);
  return best_matching(edges, 0, busy);
}

bool has_perfect_matching(const Graph& g) {
  return g.order() % 2 == 0 && 2 * matching_number(g) == g.order();
}

std::size_t odd_components_without(const Graph& g, std::uint64_t removed) {
  const std::size_t n = g.order();
  std::uint64_t remaining = (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) & ~removed;
  std::size_t odd = 0;
  while (remaining != 0) {
    std::uint64_t comp = remaining & (~remaining + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.row_mask(static_cast<Vertex>(std::countr_zero(f)));
      next &= remaining & ~comp;
      comp |= next;
      frontier = next;
    }
    if (std::popcount(comp) % 2 == 1) ++odd;
    remaining &= ~comp;
  }
  return odd;
}

TutteBergeWitness tutte_berge_witness(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kWitnessOrderCap) {
    throw CapExceeded("Tutte-Berge witness: order " + std::to_string(n) + " exceeds cap of " +
                      std::to_string(kWitnessOrderCap));
  }
  std::uint64_t best_set = 0;
  long long best_deficiency = -1;
  std::size_t best_odd = 0;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
    const std::size_t odd = odd_components_without(g, set);
    const long long deficiency = static_cast<long long>(odd) - std::popcount(set);
    bool better = deficiency > best_deficiency;
    if (deficiency == best_deficiency) {
      const int size = std::popcount(set);
      const int best_size = std::popcount(best_set);
      if (size != best_size) {
        better = size < best_size;
      } else {
        // Same size: the sorted list is lexicographically smaller iff the
        // lowest differing vertex belongs to it.
        const std::uint64_t diff = set ^ best_set;
        better = diff != 0 && (set & (diff & (~diff + 1))) != 0;
      }
    }
    if (better) {
      best_set = set;
      best_deficiency = deficiency;
      best_odd = odd;
    }
  }

  TutteBergeWitness w;
  for (std::uint64_t m = best_set; m != 0; m &= m - 1) w.witness_set.push_back(static_cast<Vertex>(std::countr_zero(m)));
  w.s = w.witness_set.size();
  w.odd_components = best_odd;
  w.beta = (n - static_cast<std::size_t>(best_deficiency)) / 2;
  w.q = n + w.s - 2 * w.beta;
  return w;
}

}  // namespace alpharad
