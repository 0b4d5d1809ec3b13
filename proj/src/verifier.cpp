#include "alpharad/verifier.hpp"

#include <bit>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "alpharad/canonical.hpp"
#include "alpharad/graph_io.hpp"
#include "alpharad/matching.hpp"

namespace alpharad {
namespace {

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += jobs) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<Graph> extend_by_one_vertex(const std::vector<Graph>& smaller, std::size_t n) {
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> found;
  for (const auto& base : smaller) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      Graph g(n);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (Vertex u = 0; u + 1 < n; ++u)
        if ((mask >> u) & 1U) g.add_edge(u, n - 1);
      auto canon = canonical_labeling(g);
      auto key = to_graph6(canon.graph);
      if (seen.insert(key).second) found.emplace_back(std::move(key), std::move(canon.graph));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    const auto ea = a.second.size();
    const auto eb = b.second.size();
    return ea != eb ? ea < eb : a.first < b.first;
  });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<std::string> sorted_certificates(const std::vector<Graph>& graphs) {
  std::set<std::string> unique;
  for (const auto& g : graphs) unique.insert(canonical_graph6(g));
  return {unique.begin(), unique.end()};
}

void partitions_into(std::size_t remaining, std::size_t max_part, std::size_t slots, std::vector<std::size_t>& current,
                     std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (slots == 0) return;
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_into(remaining - part, part, slots - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(std::size_t n) {
  if (n > kEnumerationCap) {
    throw CapExceeded("built-in enumeration covers order <= " + std::to_string(kEnumerationCap) +
                      "; supply a graph6 file for order " + std::to_string(n));
  }
  static std::mutex mutex;
  static std::vector<std::vector<Graph>> levels;
  std::lock_guard lock(mutex);
  if (levels.empty()) levels.push_back({Graph(0)});
  while (levels.size() <= n) {
    const std::size_t next = levels.size();
    if (next == 1) {
      levels.push_back({Graph(1)});
    } else {
      levels.push_back(extend_by_one_vertex(levels.back(), next));
    }
  }
  return levels[n];
}

VerificationReport exhaustive_max(std::size_t n, std::size_t beta, const Alpha& alpha, const VerifyOptions& options) {
  const auto& classes = enumerate_graphs(n);
  return exhaustive_max(std::span<const Graph>(classes), n, beta, alpha, options);
}

VerificationReport exhaustive_max(std::span<const Graph> classes, std::size_t n, std::size_t beta, const Alpha& alpha,
                                  const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (!(options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (beta > n / 2) {
    throw std::invalid_argument("no graph of order " + std::to_string(n) + " has matching number " +
                                std::to_string(beta));
  }
  for (const auto& g : classes) {
    if (g.order() != n) {
      throw std::invalid_argument("class list contains a graph of order " + std::to_string(g.order()) +
                                  ", expected " + std::to_string(n));
    }
  }

  const double spectral_tol = std::min(kDefaultTolerance, options.tol);
  std::vector<double> rho(classes.size(), -1.0);
  parallel_for(classes.size(), options.jobs, [&](std::size_t i) {
    if (matching_number(classes[i]) == beta) rho[i] = spectral_radius(classes[i], alpha.value(), spectral_tol).rho;
  });

  VerificationReport r;
  r.n = n;
  r.beta = beta;
  r.alpha = alpha;
  r.tol = options.tol;
  r.graphs_scanned = classes.size();

  double best = -1.0;
  for (double x : rho) best = std::max(best, x);
  if (best < 0.0) {
    throw std::invalid_argument("no scanned graph of order " + std::to_string(n) + " has matching number " +
                                std::to_string(beta));
  }
  std::vector<Graph> argmax;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (rho[i] >= 0.0 && rho[i] >= best - 10.0 * options.tol) argmax.push_back(classes[i]);
  }
  r.observed_max = best;
  r.argmax_certificates = sorted_certificates(argmax);

  const auto verdict = classify_regime(n, beta, alpha);
  r.predicted_max = verdict.predicted_rho;
  r.predicted_certificates = sorted_certificates(predicted_extremal_graphs(verdict, n, beta));
  r.value_pass = std::abs(r.observed_max - r.predicted_max) <= options.tol;
  r.structure_pass = r.argmax_certificates == r.predicted_certificates;
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<std::vector<std::size_t>> odd_partitions(std::size_t total, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  if (q == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  if (total < q || (total - q) % 2 != 0) return out;
  // n_i = 2 m_i + 1 with m a partition of (total - q) / 2 into at most q parts.
  std::vector<std::vector<std::size_t>> halves;
  std::vector<std::size_t> current;
  const std::size_t half = (total - q) / 2;
  partitions_into(half, half, q, current, halves);
  for (const auto& m : halves) {
    std::vector<std::size_t> parts(q - m.size(), 1);
    for (auto x : m) parts.push_back(2 * x + 1);
    std::sort(parts.begin(), parts.end());
    out.push_back(std::move(parts));
  }
  return out;
}

FamilySearchResult family_search(std::size_t n, std::size_t beta, const Alpha& alpha, double tol) {
  if (n < 2 * beta + 1) throw std::invalid_argument("family_search needs n >= 2 beta + 1");
  FamilySearchResult r;
  r.n = n;
  r.beta = beta;
  r.alpha = alpha;
  r.extremal_structure = true;
  bool have_best = false;
  for (std::size_t s = 0; s <= beta; ++s) {
    const std::size_t q = n + s - 2 * beta;
    std::vector<FamilyCandidate> candidates;
    for (auto& parts : odd_partitions(n - s, q)) {
      JoinFamily family = make_join_family(s, std::move(parts));
      const double rho = quotient_radius(family, alpha.value());
      candidates.push_back({std::move(family), rho});
    }
    r.families_scanned += candidates.size();
    auto winner = std::max_element(candidates.begin(), candidates.end(),
                                   [](const auto& a, const auto& b) { return a.rho < b.rho; });
    const bool canonical = winner->family == extremal_family(n, beta, s);
    bool separated = true;
    for (auto it = candidates.begin(); it != candidates.end(); ++it) {
      if (it != winner && it->rho >= winner->rho - 10.0 * tol) separated = false;
    }
    r.extremal_structure = r.extremal_structure && canonical && separated;
    r.best_per_s.push_back(*winner);
    if (!have_best || winner->rho > r.best.rho + 10.0 * tol) {
      r.best = *winner;
      have_best = true;
    }
  }

  const auto verdict = classify_regime(n, beta, alpha);
  r.predicted_max = verdict.predicted_rho;
  const Graph winner_graph = family_graph(r.best.family);
  bool shape_ok = false;
  for (auto kind : verdict.extremal) shape_ok = shape_ok || is_predicted_graph(winner_graph, kind, n, beta);
  r.matches_prediction = shape_ok && std::abs(r.best.rho - r.predicted_max) <= tol;
  return r;
}

bool shift_monotonicity_check(const JoinFamily& family, double alpha) {
  const std::size_t q = family.q();
  if (family.s == 0 || q < 2 || family.parts[q - 2] < 3) {
    throw std::invalid_argument("shift check needs s >= 1, q >= 2 and n_{q-1} >= 3");
  }
  std::vector<std::size_t> shifted = family.parts;
  shifted[q - 2] -= 2;
  shifted[q - 1] += 2;
  const JoinFamily moved = make_join_family(family.s, std::move(shifted));
  return quotient_radius(moved, alpha) > quotient_radius(family, alpha);
}

namespace {
const double kGoldenConjugate = (std::sqrt(5.0) - 1.0) / 2.0;
}

bool in_case2_region(std::size_t beta, double alpha, std::size_t s, std::size_t n) {
  if (!(alpha > kGoldenConjugate) || s < 1) return false;
  const double a = alpha;
  const double b = static_cast<double>(beta);
  const double ss = static_cast<double>(s);
  const double nn = static_cast<double>(n);
  const double n_star = ((2.0 * a + 3.0) * b + a + 2.0) / (a + 1.0);
  return nn > n_star && nn + a * ss - a * b + ss - 2.0 * b - 1.0 < 0.0 &&
         ss <= (a * a + a - 1.0) * b / ((1.0 + a) * (1.0 + a));
}

Case2Sample case2_sample_check(std::size_t beta, double alpha, std::size_t s, std::size_t n) {
  Case2Sample out;
  if (!(alpha > kGoldenConjugate)) return out;
  if (!in_case2_region(beta, alpha, s, n)) throw std::domain_error("parameters outside the second-branch region");
  out.applicable = true;
  const double a = alpha;
  out.probe = a * static_cast<double>(n) + (a + 2.0) / (a + 1.0) * static_cast<double>(beta) - a * (a + 2.0) / (a + 1.0);
  out.value = cubic_f(out.probe, n, beta, s, a);
  out.positive = out.value > 0.0;
  return out;
}

bool is_predicted_graph(const Graph& g, Extremal kind, std::size_t n, std::size_t beta) {
  if (g.order() != n) return false;
  std::vector<std::size_t> expected;
  switch (kind) {
    case Extremal::Empty: expected.assign(n, 0); break;
    case Extremal::Complete: expected.assign(n, n == 0 ? 0 : n - 1); break;
    case Extremal::OddCliquePlusIsolates:
      if (n < 2 * beta + 1) return false;
      expected.assign(2 * beta + 1, 2 * beta);
      expected.resize(n, 0);
      break;
    case Extremal::CompleteSplit:
      if (n < beta) return false;
      expected.assign(beta, n - 1);
      expected.resize(n, beta);
      break;
  }
  auto degrees = g.degrees();
  std::sort(degrees.begin(), degrees.end());
  std::sort(expected.begin(), expected.end());
  return degrees == expected;
}

bool matches_witness_structure(const Graph& g) {
  const std::size_t n = g.order();
  const auto witness = tutte_berge_witness(g);  // enforces the order cap
  const long long deficiency = static_cast<long long>(witness.odd_components) - static_cast<long long>(witness.s);
  // G is a subgraph of K_S v (cliques on the components of G - S), so the two
  // are isomorphic exactly when they are equal.
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
    if (static_cast<long long>(odd_components_without(g, set)) - std::popcount(set) != deficiency) continue;
    bool universal = true;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if ((set >> v) & 1U) {
        universal = universal && g.degree(v) == n - 1;
      } else {
        rest.push_back(v);
      }
    }
    if (!universal) continue;
    const Graph remainder = induced_subgraph(g, rest);
    const auto parts = components(remainder);
    if (set != 0 && parts.even_count > 0) continue;
    std::size_t clique_edges = 0;
    for (const auto& part : parts.components) clique_edges += part.size() * (part.size() - 1) / 2;
    if (remainder.size() == clique_edges) return true;
  }
  return false;
}

}  // namespace alpharad
