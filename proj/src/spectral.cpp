#include "alpharad/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace alpharad {
namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be a finite value >= 0");
}

struct ComponentRadius {
  double rho = 0.0;
  std::vector<double> vector;
  std::size_t iterations = 0;
  double residual = 0.0;
};

ComponentRadius power_iterate(const Eigen::MatrixXd& a, double shift, const SpectralOptions& options) {
  const auto m = a.rows();
  ComponentRadius out;
  if (m == 1) {
    out.rho = a(0, 0);
    out.vector = {1.0};
    return out;
  }
  Eigen::MatrixXd shifted = a;
  shifted.diagonal().array() += shift;

  Eigen::VectorXd x = Eigen::VectorXd::Ones(m);
  Eigen::VectorXd y(m);
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    y.noalias() = shifted * x;
    const double mu = x.dot(y) / x.dot(x);
    // The shift cancels: (A + cI)x - mu x = A x - (mu - c) x.
    const double residual = (y - mu * x).lpNorm<Eigen::Infinity>();
    if (residual <= options.tol) {
      out.rho = mu - shift;
      out.iterations = it;
      out.residual = residual;
      out.vector.assign(x.data(), x.data() + m);
      return out;
    }
    x = y / y.lpNorm<Eigen::Infinity>();
  }
  throw NonConvergence("power iteration did not reach residual " + std::to_string(options.tol) + " in " +
                       std::to_string(options.max_iterations) + " iterations");
}

// Householder reduction of a symmetric matrix to tridiagonal form.
void tridiagonalize(Eigen::MatrixXd a, std::vector<double>& diag, std::vector<double>& off) {
  const auto n = a.rows();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index len = n - k - 1;
    Eigen::VectorXd v = a.col(k).tail(len);
    const double norm = v.norm();
    if (norm == 0.0) continue;
    const double head = v(0) >= 0 ? -norm : norm;
    v(0) -= head;
    const double vnorm = v.norm();
    if (vnorm == 0.0) continue;
    v /= vnorm;
    auto block = a.block(k + 1, k + 1, len, len);
    Eigen::VectorXd u = block * v;
    const double gamma = v.dot(u);
    Eigen::VectorXd w = u - gamma * v;
    block -= 2.0 * (v * w.transpose() + w * v.transpose());
    a.col(k).tail(len).setZero();
    a.row(k).tail(len).setZero();
    a(k + 1, k) = head;
    a(k, k + 1) = head;
  }
  diag.resize(static_cast<std::size_t>(n));
  off.assign(n > 0 ? static_cast<std::size_t>(n - 1) : 0, 0.0);
  for (Eigen::Index i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = a(i, i);
  for (Eigen::Index i = 0; i + 1 < n; ++i) off[static_cast<std::size_t>(i)] = a(i + 1, i);
}

// Number of eigenvalues of the tridiagonal matrix strictly below x.
std::size_t count_below(const std::vector<double>& diag, const std::vector<double>& off, double x) {
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double e2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
    q = diag[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::abs(x) + 1.0);
    if (q < 0.0) ++count;
  }
  return count;
}

void check_family_parts(const JoinFamily& f) {
  for (auto p : f.parts) {
    if (p == 0 || p % 2 == 0) throw std::invalid_argument("join family parts must be odd and positive");
  }
}

}  // namespace

Eigen::MatrixXd alpha_matrix(const Graph& g, double alpha) {
  check_alpha(alpha);
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
    a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1.0;
  }
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = alpha * static_cast<double>(g.degree(static_cast<Vertex>(i)));
  return a;
}

SpectralResult spectral_radius(const Graph& g, double alpha, double tol) {
  return spectral_radius(g, alpha, SpectralOptions{tol, SpectralOptions{}.max_iterations});
}

SpectralResult spectral_radius(const Graph& g, double alpha, const SpectralOptions& options) {
  check_alpha(alpha);
  if (!(options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  SpectralResult result;
  if (g.order() == 0) return result;

  const double shift = 1.0 + alpha * static_cast<double>(g.max_degree());
  const Eigen::MatrixXd full = alpha_matrix(g, alpha);
  bool first = true;
  for (const auto& part : components(g).components) {
    const auto m = static_cast<Eigen::Index>(part.size());
    Eigen::MatrixXd block(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j)
        block(i, j) = full(static_cast<Eigen::Index>(part[static_cast<std::size_t>(i)]),
                           static_cast<Eigen::Index>(part[static_cast<std::size_t>(j)]));
    ComponentRadius c = power_iterate(block, shift, options);
    result.iterations += c.iterations;
    if (first || c.rho > result.rho) {
      result.rho = c.rho;
      result.perron_support = part;
      result.perron_vector = std::move(c.vector);
      result.residual = c.residual;
      first = false;
    }
  }
  return result;
}

double largest_symmetric_eigenvalue(const Eigen::MatrixXd& a) {
  const auto n = a.rows();
  if (n == 0) return 0.0;
  if (n == 1) return a(0, 0);
  std::vector<double> diag;
  std::vector<double> off;
  tridiagonalize(a, diag, off);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i + 1 < diag.size()) radius += std::abs(off[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  hi += 1.0;
  lo -= 1.0;
  const std::size_t total = diag.size();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(diag, off, mid) == total) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double spectral_radius_oracle(const Graph& g, double alpha) {
  if (g.order() > kOracleOrderCap) {
    throw CapExceeded("spectral oracle: order " + std::to_string(g.order()) + " exceeds cap of " +
                      std::to_string(kOracleOrderCap));
  }
  return largest_symmetric_eigenvalue(alpha_matrix(g, alpha));
}

std::size_t JoinFamily::order() const { return s + std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

std::size_t JoinFamily::matching_number() const {
  if (s > q()) return order() / 2;
  std::size_t beta = s;
  for (auto p : parts) beta += (p - 1) / 2;
  return beta;
}

JoinFamily make_join_family(std::size_t s, std::vector<std::size_t> parts) {
  JoinFamily f{s, std::move(parts)};
  check_family_parts(f);
  if (s >= 1 && f.parts.empty()) throw std::invalid_argument("join family with s >= 1 needs at least one part");
  std::sort(f.parts.begin(), f.parts.end());
  return f;
}

JoinFamily extremal_family(std::size_t n, std::size_t beta, std::size_t s) {
  if (s > beta || n + s < 2 * beta + 1) throw std::invalid_argument("extremal_family: need s <= beta and n + s >= 2 beta + 1");
  const std::size_t q = n + s - 2 * beta;
  std::vector<std::size_t> parts(q - 1, 1);
  parts.push_back(2 * beta - 2 * s + 1);
  return make_join_family(s, std::move(parts));
}

Graph family_graph(const JoinFamily& family) {
  Graph cliques;
  for (auto p : family.parts) cliques = disjoint_union(cliques, complete_graph(p));
  return join(complete_graph(family.s), cliques);
}

Eigen::MatrixXd quotient_matrix(const JoinFamily& family, double alpha) {
  check_alpha(alpha);
  check_family_parts(family);
  if (family.s == 0) throw std::invalid_argument("quotient_matrix needs s >= 1");
  const auto q = static_cast<Eigen::Index>(family.q());
  const double s = static_cast<double>(family.s);
  const double n = static_cast<double>(family.order());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(q + 1, q + 1);
  for (Eigen::Index i = 0; i < q; ++i) {
    const double ni = static_cast<double>(family.parts[static_cast<std::size_t>(i)]);
    b(i, i) = (alpha + 1.0) * (ni - 1.0) + alpha * s;
    b(i, q) = s;
    b(q, i) = ni;
  }
  b(q, q) = alpha * n + s - alpha - 1.0;
  return b;
}

Eigen::MatrixXd system_matrix(const JoinFamily& family, double alpha, double lambda) {
  Eigen::MatrixXd b = quotient_matrix(family, alpha);
  const auto q = b.rows() - 1;
  Eigen::MatrixXd m = -b;
  m.diagonal().array() += lambda;
  // Core row is written as sum n_i x_i - (lambda - c) p = 0, the negation of
  // the corresponding row of lambda I - B.
  m.row(q) *= -1.0;
  return m;
}

double determinant_relation(const JoinFamily& family, double alpha, double lambda) {
  Eigen::MatrixXd b = quotient_matrix(family, alpha);
  const auto q = b.rows() - 1;
  const double s = static_cast<double>(family.s);
  const double core = lambda - b(q, q);
  double product = 1.0;
  for (Eigen::Index i = 0; i < q; ++i) product *= lambda - b(i, i);
  double coupling = 0.0;
  for (Eigen::Index i = 0; i < q; ++i) {
    double others = 1.0;
    for (Eigen::Index j = 0; j < q; ++j)
      if (j != i) others *= lambda - b(j, j);
    coupling += b(q, i) * s * others;
  }
  return -(core * product - coupling);
}

double quotient_radius(const JoinFamily& family, double alpha) {
  check_alpha(alpha);
  check_family_parts(family);
  if (family.s == 0) {
    if (family.parts.empty()) return 0.0;
    return (alpha + 1.0) * (static_cast<double>(*std::max_element(family.parts.begin(), family.parts.end())) - 1.0);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(quotient_matrix(family, alpha), false);
  return solver.eigenvalues().real().maxCoeff();
}

double split_quadratic(double lambda, std::size_t n, std::size_t beta, double alpha) {
  const double nn = static_cast<double>(n);
  const double b = static_cast<double>(beta);
  const double linear = alpha * nn + (alpha + 1.0) * b - (alpha + 1.0);
  const double constant = (alpha * alpha - 1.0) * b * nn + (alpha + 1.0) * b * b - alpha * (alpha + 1.0) * b;
  return lambda * lambda - linear * lambda + constant;
}

double closed_form_complete_split(std::size_t n, std::size_t beta, double alpha) {
  check_alpha(alpha);
  if (!(n > beta && beta >= 1)) throw std::invalid_argument("closed_form_complete_split needs n > beta >= 1");
  const double nn = static_cast<double>(n);
  const double b = static_cast<double>(beta);
  const double linear = alpha * nn + (alpha + 1.0) * b - (alpha + 1.0);
  const double constant = (alpha * alpha - 1.0) * b * nn + (alpha + 1.0) * b * b - alpha * (alpha + 1.0) * b;
  return 0.5 * std::sqrt(linear * linear - 4.0 * constant) + 0.5 * linear;
}

double cubic_f(double lambda, std::size_t n, std::size_t beta, std::size_t s, double alpha) {
  const double nn = static_cast<double>(n);
  const double b = static_cast<double>(beta);
  const double ss = static_cast<double>(s);
  const double clique = lambda - 2.0 * (alpha + 1.0) * b + (alpha + 2.0) * ss;
  const double singles = lambda - alpha * ss;
  return (lambda - alpha * nn - ss + alpha + 1.0) * singles * clique - ss * (nn + ss - 2.0 * b - 1.0) * clique -
         ss * (2.0 * b - 2.0 * ss + 1.0) * singles;
}

double largest_root_f(std::size_t n, std::size_t beta, std::size_t s, double alpha, double tol) {
  check_alpha(alpha);
  if (s > beta) throw BracketFailure("largest_root_f: s > beta");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (s == 0) return 2.0 * (alpha + 1.0) * static_cast<double>(beta);

  auto f = [&](double x) { return cubic_f(x, n, beta, s, alpha); };
  double lo = 2.0 * (alpha + 1.0) * static_cast<double>(beta) - (alpha + 1.0) * static_cast<double>(s);
  double hi = (alpha + 1.0) * (static_cast<double>(n) - 1.0) + 1.0;
  if (!(f(lo) <= 0.0 && f(hi) > 0.0)) {
    throw BracketFailure("largest_root_f: no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  while (hi - lo > tol * std::max(1.0, std::abs(lo))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double nn = static_cast<double>(n);
  const double b = static_cast<double>(beta);
  const double ss = static_cast<double>(s);
  auto slope = [&](double x) {
    const double first = x - alpha * nn - ss + alpha + 1.0;
    const double singles = x - alpha * ss;
    const double clique = x - 2.0 * (alpha + 1.0) * b + (alpha + 2.0) * ss;
    return singles * clique + first * clique + first * singles - ss * (nn + ss - 2.0 * b - 1.0) -
           ss * (2.0 * b - 2.0 * ss + 1.0);
  };
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    const double d = slope(x);
    if (!(d > 0.0)) break;
    const double next = x - f(x) / d;
    if (next < lo || next > hi) break;
    x = next;
  }
  return x;
}

double shift_function_f(double delta, double lambda, const JoinFamily& family, double alpha) {
  check_alpha(alpha);
  check_family_parts(family);
  const std::size_t q = family.q();
  if (q < 2) throw std::domain_error("shift_function_f needs at least two parts");
  if (family.s == 0) throw std::domain_error("shift_function_f needs s >= 1");
  if (!(delta >= 0.0 && delta <= 2.0)) throw std::domain_error("shift_function_f needs delta in [0, 2]");
  const double s = static_cast<double>(family.s);
  const double n = static_cast<double>(family.order());
  const double second = static_cast<double>(family.parts[q - 2]);
  const double largest = static_cast<double>(family.parts[q - 1]);
  if (second > largest) throw std::domain_error("shift_function_f needs parts sorted ascending");
  if (lambda < (alpha + 1.0) * (largest + s - 1.0)) {
    throw std::domain_error("shift_function_f: lambda below (alpha+1)(n_q + s - 1)");
  }
  auto term = [&](double size) { return size / (lambda - (alpha + 1.0) * (size - 1.0) - alpha * s); };
  double value = (lambda - alpha * n - s + alpha + 1.0) / s;
  for (std::size_t i = 0; i + 2 < q; ++i) value -= term(static_cast<double>(family.parts[i]));
  value -= term(second - delta);
  value -= term(largest + delta);
  return value;
}

}  // namespace alpharad
