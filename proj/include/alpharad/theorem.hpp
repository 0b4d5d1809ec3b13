#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "alpharad/graph.hpp"
#include "alpharad/rational.hpp"

namespace alpharad {

/// Regimes of the maximal alpha-spectral radius over graphs of order n with
/// matching number beta, split at n* = ((2 alpha + 3) beta + alpha + 2) / (alpha + 1).
enum class Regime {
  Degenerate,  // beta = 0: only the empty graph
  Full,        // n = 2 beta or n = 2 beta + 1
  Below,       // 2 beta + 2 <= n < n*
  Threshold,   // n = n*
  Above,       // n > n*
};

enum class Extremal {
  Empty,                  // complement of K_n
  Complete,               // K_n
  OddCliquePlusIsolates,  // K_{2 beta + 1} u complement(K_{n - 2 beta - 1})
  CompleteSplit,          // K_beta v complement(K_{n - beta})
};

std::string_view to_string(Regime regime);
std::string_view to_string(Extremal extremal);

struct RegimeVerdict {
  Regime regime = Regime::Degenerate;
  int case_number = 0;  // 1..4 in the order of Full, Below, Threshold, Above; 0 when degenerate
  double n_star = 0.0;
  std::optional<Rational> n_star_exact;
  double predicted_rho = 0.0;
  std::vector<Extremal> extremal;
  /// Above only: some 1 <= s <= beta has n + alpha s - alpha beta + s - 2 beta - 1 < 0,
  /// i.e. the second branch of the upper-bound argument is reached.
  bool case2_branch = false;
};

double threshold_n_star(std::size_t beta, const Alpha& alpha);
/// Exact n* when alpha is exact.
std::optional<Rational> threshold_n_star_exact(std::size_t beta, const Alpha& alpha);

/// Throws std::invalid_argument when beta > floor(n/2).
RegimeVerdict classify_regime(std::size_t n, std::size_t beta, const Alpha& alpha);

Graph extremal_graph(Extremal kind, std::size_t n, std::size_t beta);
std::vector<Graph> predicted_extremal_graphs(const RegimeVerdict& verdict, std::size_t n, std::size_t beta);

double predicted_bound(std::size_t n, std::size_t beta, const Alpha& alpha);

}  // namespace alpharad
