#include "alpharad/theorem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "alpharad/spectral.hpp"

namespace alpharad {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Degenerate: return "DEGENERATE";
    case Regime::Full: return "FULL";
    case Regime::Below: return "BELOW";
    case Regime::Threshold: return "THRESHOLD";
    case Regime::Above: return "ABOVE";
  }
  return "?";
}

std::string_view to_string(Extremal extremal) {
  switch (extremal) {
    case Extremal::Empty: return "EMPTY";
    case Extremal::Complete: return "COMPLETE";
    case Extremal::OddCliquePlusIsolates: return "ODD_CLIQUE_PLUS_ISOLATES";
    case Extremal::CompleteSplit: return "COMPLETE_SPLIT";
  }
  return "?";
}

double threshold_n_star(std::size_t beta, const Alpha& alpha) {
  if (auto exact = threshold_n_star_exact(beta, alpha)) return exact->to_double();
  const double a = alpha.value();
  const double b = static_cast<double>(beta);
  return ((2.0 * a + 3.0) * b + a + 2.0) / (a + 1.0);
}

std::optional<Rational> threshold_n_star_exact(std::size_t beta, const Alpha& alpha) {
  if (!alpha.exact()) return std::nullopt;
  const __int128 p = alpha.exact()->num;
  const __int128 q = alpha.exact()->den;
  const __int128 num = (2 * p + 3 * q) * static_cast<__int128>(beta) + p + 2 * q;
  const __int128 den = p + q;
  constexpr __int128 limit = static_cast<__int128>(INT64_MAX);
  if (num > limit || den > limit) return std::nullopt;
  return Rational::make(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

RegimeVerdict classify_regime(std::size_t n, std::size_t beta, const Alpha& alpha) {
  if (beta > n / 2) {
    throw std::invalid_argument("no graph of order " + std::to_string(n) + " has matching number " +
                                std::to_string(beta));
  }
  const double a = alpha.value();
  const double b = static_cast<double>(beta);
  const double nn = static_cast<double>(n);
  RegimeVerdict v;
  if (beta == 0) {
    v.extremal = {Extremal::Empty};
    return v;
  }
  v.n_star_exact = threshold_n_star_exact(beta, alpha);
  v.n_star = threshold_n_star(beta, alpha);

  if (n == 2 * beta || n == 2 * beta + 1) {
    v.regime = Regime::Full;
    v.case_number = 1;
    v.predicted_rho = (a + 1.0) * (nn - 1.0);
    v.extremal = {Extremal::Complete};
    return v;
  }

  int side = 0;  // sign of n - n*
  if (v.n_star_exact) {
    const __int128 lhs = static_cast<__int128>(n) * v.n_star_exact->den;
    const __int128 rhs = v.n_star_exact->num;
    side = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  } else {
    side = nn < v.n_star ? -1 : (nn > v.n_star ? 1 : 0);
  }

  if (side < 0) {
    v.regime = Regime::Below;
    v.case_number = 2;
    v.predicted_rho = 2.0 * (a + 1.0) * b;
    v.extremal = {Extremal::OddCliquePlusIsolates};
  } else if (side == 0) {
    v.regime = Regime::Threshold;
    v.case_number = 3;
    v.predicted_rho = 2.0 * (a + 1.0) * b;
    v.extremal = {Extremal::CompleteSplit, Extremal::OddCliquePlusIsolates};
  } else {
    v.regime = Regime::Above;
    v.case_number = 4;
    v.predicted_rho = closed_form_complete_split(n, beta, a);
    v.extremal = {Extremal::CompleteSplit};
    // n + alpha s - alpha beta + s - 2 beta - 1 grows with s, so s = 1 decides.
    v.case2_branch = nn + a - a * b + 1.0 - 2.0 * b - 1.0 < 0.0;
  }
  return v;
}

Graph extremal_graph(Extremal kind, std::size_t n, std::size_t beta) {
  switch (kind) {
    case Extremal::Empty: return empty_graph(n);
    case Extremal::Complete: return complete_graph(n);
    case Extremal::OddCliquePlusIsolates:
      if (n < 2 * beta + 1) throw std::invalid_argument("K_{2beta+1} needs n >= 2 beta + 1");
      return disjoint_union(complete_graph(2 * beta + 1), empty_graph(n - 2 * beta - 1));
    case Extremal::CompleteSplit:
      if (n < beta) throw std::invalid_argument("K_beta v complement(K_{n-beta}) needs n >= beta");
      return join(complete_graph(beta), empty_graph(n - beta));
  }
  throw std::logic_error("unknown extremal descriptor");
}

std::vector<Graph> predicted_extremal_graphs(const RegimeVerdict& verdict, std::size_t n, std::size_t beta) {
  std::vector<Graph> out;
  for (auto kind : verdict.extremal) out.push_back(extremal_graph(kind, n, beta));
  return out;
}

double predicted_bound(std::size_t n, std::size_t beta, const Alpha& alpha) {
  return classify_regime(n, beta, alpha).predicted_rho;
}

}  // namespace alpharad
