#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "alpharad/errors.hpp"
#include "alpharad/graph.hpp"
#include "alpharad/rational.hpp"
#include "alpharad/spectral.hpp"
#include "alpharad/theorem.hpp"

namespace alpharad {

inline constexpr std::size_t kEnumerationCap = 8;
inline constexpr double kVerifyTolerance = 1e-9;

/// One canonical representative per isomorphism class of order n, built by
/// adding a vertex to every class of order n - 1 and deduplicating canonical
/// forms. Results are cached per order. Throws CapExceeded above order 8.
const std::vector<Graph>& enumerate_graphs(std::size_t n);

struct VerifyOptions {
  double tol = kVerifyTolerance;
  unsigned jobs = 1;
};

struct VerificationReport {
  std::size_t n = 0;
  std::size_t beta = 0;
  Alpha alpha;
  double observed_max = 0.0;
  std::vector<std::string> argmax_certificates;  // canonical graph6, sorted
  double predicted_max = 0.0;
  std::vector<std::string> predicted_certificates;
  bool value_pass = false;
  bool structure_pass = false;
  double tol = kVerifyTolerance;
  std::size_t graphs_scanned = 0;
  double wall_time = 0.0;
};

/// Maximum of rho_alpha over the classes with matching number beta. Graphs
/// within 10 * tol of the maximum all count as maximisers.
/// Throws std::invalid_argument when no scanned graph has matching number beta.
VerificationReport exhaustive_max(std::size_t n, std::size_t beta, const Alpha& alpha,
                                  const VerifyOptions& options = {});

/// Same scan over a caller-supplied class list (e.g. a graph6 file). Every
/// graph must have order n; matching numbers are recomputed.
VerificationReport exhaustive_max(std::span<const Graph> classes, std::size_t n, std::size_t beta,
                                  const Alpha& alpha, const VerifyOptions& options = {});

struct FamilyCandidate {
  JoinFamily family;
  double rho = 0.0;
};

struct FamilySearchResult {
  std::size_t n = 0;
  std::size_t beta = 0;
  Alpha alpha;
  std::vector<FamilyCandidate> best_per_s;  // index s = 0..beta
  FamilyCandidate best;
  double predicted_max = 0.0;
  /// Every per-s winner is K_s v (K_{2 beta - 2s + 1} u K_1 ...) and beats all
  /// other partitions at that s by more than 10 * tol.
  bool extremal_structure = false;
  /// best.rho matches the predicted bound and best's graph is a predicted extremal graph.
  bool matches_prediction = false;
  std::size_t families_scanned = 0;
};

/// Searches every K_s v (K_{n_1} u ... u K_{n_q}) with q = n + s - 2 beta odd parts
/// summing to n - s, 0 <= s <= beta. Throws std::invalid_argument when n < 2 beta + 1.
FamilySearchResult family_search(std::size_t n, std::size_t beta, const Alpha& alpha,
                                 double tol = kVerifyTolerance);

/// Partitions of n - s into q odd parts, each sorted ascending.
std::vector<std::vector<std::size_t>> odd_partitions(std::size_t total, std::size_t q);

/// rho_alpha strictly grows when n_{q-1} -> n_{q-1} - 2 and n_q -> n_q + 2.
/// Throws std::invalid_argument unless s >= 1, q >= 2 and n_{q-1} >= 3.
bool shift_monotonicity_check(const JoinFamily& family, double alpha);

struct Case2Sample {
  bool applicable = false;  // false when alpha <= (sqrt(5) - 1) / 2
  bool positive = false;
  double value = 0.0;       // cubic_f at the probe point
  double probe = 0.0;       // alpha n + (alpha+2) beta / (alpha+1) - alpha (alpha+2) / (alpha+1)
};

bool in_case2_region(std::size_t beta, double alpha, std::size_t s, std::size_t n);

/// Evaluates cubic_f at the probe point inside the second-branch region.
/// Throws std::domain_error for parameters outside the region when alpha is
/// above (sqrt(5) - 1) / 2.
Case2Sample case2_sample_check(std::size_t beta, double alpha, std::size_t s, std::size_t n);

/// Sorted degree sequence test for the three extremal shapes.
bool is_predicted_graph(const Graph& g, Extremal kind, std::size_t n, std::size_t beta);

/// Some S attaining the Tutte-Berge minimum has g = K_S v (cliques on the
/// components of G - S), with no even component when S is nonempty.
/// Throws CapExceeded above 24 vertices.
bool matches_witness_structure(const Graph& g);

}  // namespace alpharad
