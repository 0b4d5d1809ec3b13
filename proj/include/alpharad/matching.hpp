#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "alpharad/errors.hpp"
#include "alpharad/graph.hpp"

namespace alpharad {

inline constexpr Vertex kUnmatched = std::numeric_limits<Vertex>::max();

inline constexpr std::size_t kOracleEdgeCap = 24;
inline constexpr std::size_t kWitnessOrderCap = 24;

/// mate[v] is the partner of v in a maximum matching, or kUnmatched.
/// Edmonds' blossom search, augmenting from each unmatched vertex in index
/// order, so the result is reproducible.
std::vector<Vertex> maximum_matching(const Graph& g);

std::size_t matching_number(const Graph& g);

/// Exhaustive search over edge subsets. Throws CapExceeded above 24 edges.
std::size_t matching_number_oracle(const Graph& g);

bool has_perfect_matching(const Graph& g);

struct TutteBergeWitness {
  std::vector<Vertex> witness_set;  // S, ascending
  std::size_t s = 0;                // |S|
  std::size_t odd_components = 0;   // o(G - S)
  std::size_t beta = 0;             // (n - (o(G-S) - |S|)) / 2
  std::size_t q = 0;                // n + s - 2 beta
};

/// Minimiser of n - (o(G-S) - |S|) over all S. Ties go to the smallest |S|,
/// then to the lexicographically smallest sorted vertex list.
/// Throws CapExceeded above 24 vertices.
TutteBergeWitness tutte_berge_witness(const Graph& g);

/// o(G - S) for S given as a vertex mask. Requires order() <= 64.
std::size_t odd_components_without(const Graph& g, std::uint64_t removed);

}  // namespace alpharad
