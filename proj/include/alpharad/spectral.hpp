#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "alpharad/errors.hpp"
#include "alpharad/graph.hpp"

namespace alpharad {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr double kRootTolerance = 1e-12;
inline constexpr std::size_t kOracleOrderCap = 64;

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectralOptions {
  double tol = kDefaultTolerance;
  std::size_t max_iterations = 1'000'000;
};

/// Largest eigenvalue of A_alpha together with its Perron vector.
///
/// The Perron vector covers the component that attains the maximum only:
/// `perron_vector[i]` is the coordinate of vertex `perron_support[i]`. It is
/// positive and scaled so that its largest entry is 1. Both are empty for the
/// order-0 graph.
struct SpectralResult {
  double rho = 0.0;
  std::vector<Vertex> perron_support;
  std::vector<double> perron_vector;
  std::size_t iterations = 0;
  double residual = 0.0;  // max-norm of A_alpha x - rho x
};

/// alpha * D(G) + A(G). Throws std::invalid_argument for negative alpha.
Eigen::MatrixXd alpha_matrix(const Graph& g, double alpha);

/// Power iteration on A_alpha + cI, c = 1 + alpha * max degree, one
/// connected component at a time. Throws NonConvergence when the residual
/// does not drop to `tol` within the iteration limit.
SpectralResult spectral_radius(const Graph& g, double alpha, double tol = kDefaultTolerance);
SpectralResult spectral_radius(const Graph& g, double alpha, const SpectralOptions& options);

/// Largest eigenvalue by Householder tridiagonalisation and Sturm-count
/// bisection. Shares no code with spectral_radius. Throws CapExceeded above
/// 64 vertices.
double spectral_radius_oracle(const Graph& g, double alpha);

/// Largest eigenvalue of a dense symmetric matrix (routine behind the oracle).
double largest_symmetric_eigenvalue(const Eigen::MatrixXd& a);

// --- K_s v (K_{n_1} u ... u K_{n_q}) ---------------------------------------

/// s join-core vertices plus odd clique parts, kept sorted ascending.
struct JoinFamily {
  std::size_t s = 0;
  std::vector<std::size_t> parts;

  std::size_t q() const { return parts.size(); }
  std::size_t order() const;
  /// s + sum (n_i - 1)/2 while s <= q; floor(n/2) otherwise.
  std::size_t matching_number() const;

  friend bool operator==(const JoinFamily&, const JoinFamily&) = default;
};

/// Sorts parts and validates: every part odd and >= 1, q >= 1 when s >= 1.
/// Throws std::invalid_argument.
JoinFamily make_join_family(std::size_t s, std::vector<std::size_t> parts);

/// The extremal shape K_s v (K_{2 beta - 2s + 1} u (q - 1) K_1), q = n + s - 2 beta.
JoinFamily extremal_family(std::size_t n, std::size_t beta, std::size_t s);

/// Join core on vertices 0..s-1, then the cliques in ascending size order.
Graph family_graph(const JoinFamily& family);

/// Divisor matrix B of the partition {parts..., core}: row i < q has
/// (alpha+1)(n_i-1) + alpha s on the diagonal and s in the core column; the
/// core row has n_i in column i and alpha n + s - alpha - 1 on the diagonal.
/// Its largest eigenvalue is rho_alpha of family_graph(family).
/// Throws std::invalid_argument when s == 0.
Eigen::MatrixXd quotient_matrix(const JoinFamily& family, double alpha);

/// Coefficient matrix M(lambda) of the linear system in (x_1..x_q, p):
/// [lambda - (alpha+1)(n_i-1) - alpha s] x_i - s p = 0 and
/// sum n_i x_i - (lambda - alpha n - s + alpha + 1) p = 0.
Eigen::MatrixXd system_matrix(const JoinFamily& family, double alpha, double lambda);

/// Closed expansion of det M(lambda):
/// -prod(lambda - d_i) * [lambda - alpha n - s + alpha + 1 - sum n_i s / (lambda - d_i)],
/// evaluated with the division cleared so it stays finite at the poles.
double determinant_relation(const JoinFamily& family, double alpha, double lambda);

/// Largest eigenvalue of quotient_matrix; for s == 0 it is the largest clique
/// radius (alpha+1)(n_q-1).
double quotient_radius(const JoinFamily& family, double alpha);

// --- K_beta v complement(K_{n-beta}) -----------------------------------------

/// g(lambda) = lambda^2 - [alpha n + (alpha+1) beta - (alpha+1)] lambda
///             + (alpha^2-1) beta n + (alpha+1) beta^2 - alpha (alpha+1) beta.
double split_quadratic(double lambda, std::size_t n, std::size_t beta, double alpha);

/// Larger root of split_quadratic. Throws std::invalid_argument unless n > beta >= 1.
double closed_form_complete_split(std::size_t n, std::size_t beta, double alpha);

// --- cubic for the extremal shape ---------------------------------------------

/// f(lambda) = (lambda - alpha n - s + alpha + 1)(lambda - alpha s)[lambda - 2(alpha+1) beta + (alpha+2) s]
///           - s (n + s - 2 beta - 1)[lambda - 2(alpha+1) beta + (alpha+2) s]
///           - s (2 beta - 2s + 1)(lambda - alpha s)
double cubic_f(double lambda, std::size_t n, std::size_t beta, std::size_t s, double alpha);

class BracketFailure : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The unique root of cubic_f in [2(alpha+1) beta - (alpha+1) s, inf): bisection
/// on [2(alpha+1) beta - (alpha+1) s, (alpha+1)(n-1) + 1], then Newton polish.
/// For s == 0 returns 2(alpha+1) beta, the radius of K_{2 beta + 1}.
/// Throws BracketFailure when the sign pattern does not bracket a root.
double largest_root_f(std::size_t n, std::size_t beta, std::size_t s, double alpha,
                      double tol = kRootTolerance);

/// f(delta, lambda): the secular function of the family after moving delta
/// vertices from the second-largest part n_{q-1} to the largest part n_q.
/// Requires q >= 2, s >= 1, delta in [0, 2] and lambda >= (alpha+1)(n_q + s - 1);
/// throws std::domain_error otherwise.
double shift_function_f(double delta, double lambda, const JoinFamily& family, double alpha);

}  // namespace alpharad
