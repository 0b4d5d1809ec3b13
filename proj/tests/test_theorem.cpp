#include <cmath>

#include "alpharad/graph_io.hpp"
#include "alpharad/matching.hpp"
#include "alpharad/spectral.hpp"
#include "alpharad/theorem.hpp"
#include "doctest.h"

using namespace alpharad;
using doctest::Approx;

TEST_CASE("alpha parsing") {
  CHECK(Alpha::parse("1/2").exact() == Rational{1, 2});
  CHECK(Alpha::parse("2/4").exact() == Rational{1, 2});
  CHECK(Alpha::parse("0.25").exact() == Rational{1, 4});
  CHECK(Alpha::parse("3").exact() == Rational{3, 1});
  CHECK(Alpha::parse("1e-3").value() == Approx(1e-3));
  CHECK_THROWS_AS(Alpha::parse("-1"), std::invalid_argument);
  CHECK_THROWS_AS(Alpha::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Alpha::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Alpha::parse(""), std::invalid_argument);
  // Doubles with short binary expansions are exact; 0.1 is not.
  CHECK(Alpha(0.5).exact() == Rational{1, 2});
  CHECK_FALSE(Alpha(0.1).exact().has_value());
  CHECK(Alpha::parse("0.1").exact() == Rational{1, 10});
}

TEST_CASE("threshold order") {
  for (std::size_t beta = 1; beta <= 12; ++beta) {
    CHECK(threshold_n_star(beta, 0.0) == Approx(3.0 * beta + 2));
    CHECK(threshold_n_star(beta, 1.0) == Approx((5.0 * beta + 3) / 2));
    CHECK(threshold_n_star_exact(beta, 1.0) == Rational::make(5 * beta + 3, 2));
  }
  CHECK(threshold_n_star(2, 0.0) == 8.0);
  CHECK(threshold_n_star_exact(2, Alpha::fraction(1, 2)) == Rational{7, 1});
  CHECK(threshold_n_star_exact(2, 2.0) == Rational{6, 1});
  CHECK_FALSE(threshold_n_star_exact(2, 0.1).has_value());
}

TEST_CASE("classification examples") {
  const auto full = classify_regime(5, 2, 0.0);
  CHECK(full.regime == Regime::Full);
  CHECK(full.case_number == 1);
  CHECK(full.predicted_rho == Approx(4.0));
  CHECK(full.extremal == std::vector<Extremal>{Extremal::Complete});

  const auto tie = classify_regime(8, 2, 0.0);
  CHECK(tie.regime == Regime::Threshold);
  CHECK(tie.case_number == 3);
  CHECK(tie.predicted_rho == Approx(4.0));
  CHECK(tie.extremal.size() == 2);

  const auto tie1 = classify_regime(9, 3, 1.0);
  CHECK(tie1.regime == Regime::Threshold);
  CHECK(tie1.predicted_rho == Approx(12.0));

  const auto below = classify_regime(7, 2, 0.0);
  CHECK(below.regime == Regime::Below);
  CHECK(below.case_number == 2);
  CHECK(below.extremal == std::vector<Extremal>{Extremal::OddCliquePlusIsolates});

  const auto above = classify_regime(10, 2, 0.0);
  CHECK(above.regime == Regime::Above);
  CHECK(above.case_number == 4);
  CHECK(above.predicted_rho == Approx((1.0 + std::sqrt(65.0)) / 2).epsilon(1e-12));
  CHECK(above.extremal == std::vector<Extremal>{Extremal::CompleteSplit});

  const auto none = classify_regime(4, 0, 1.0);
  CHECK(none.regime == Regime::Degenerate);
  CHECK(none.case_number == 0);
  CHECK(none.predicted_rho == 0.0);
  CHECK(none.extremal == std::vector<Extremal>{Extremal::Empty});

  CHECK_THROWS_AS(classify_regime(5, 3, 0.0), std::invalid_argument);
  CHECK(to_string(Regime::Threshold) == "THRESHOLD");
  CHECK(to_string(Extremal::CompleteSplit) == "COMPLETE_SPLIT");
}

TEST_CASE("threshold needs exact integrality") {
  // alpha = 1/2, beta = 2: n* = 7 exactly.
  CHECK(classify_regime(7, 2, Alpha::fraction(1, 2)).regime == Regime::Threshold);
  CHECK(classify_regime(7, 2, Alpha::parse("0.5")).regime == Regime::Threshold);
  // A nearby alpha moves n* off the integer.
  CHECK(classify_regime(7, 2, Alpha::fraction(1000001, 2000000)).regime != Regime::Threshold);
  // alpha = 1 with even beta: n* is a half-integer, never a threshold.
  for (std::size_t n = 5; n <= 20; ++n) CHECK(classify_regime(n, 2, 1.0).regime != Regime::Threshold);
  // alpha = 1/10, beta = 2: n* = 8.5 / 1.1, between 7 and 8.
  CHECK(classify_regime(7, 2, Alpha::parse("0.1")).regime == Regime::Below);
  CHECK(classify_regime(8, 2, Alpha::parse("0.1")).regime == Regime::Above);
}

TEST_CASE("predicted extremal graphs") {
  const auto full = predicted_extremal_graphs(classify_regime(6, 3, 0.0), 6, 3);
  REQUIRE(full.size() == 1);
  CHECK(full[0] == complete_graph(6));

  const auto below = predicted_extremal_graphs(classify_regime(7, 2, 0.0), 7, 2);
  REQUIRE(below.size() == 1);
  CHECK(below[0] == disjoint_union(complete_graph(5), empty_graph(2)));

  const auto above = predicted_extremal_graphs(classify_regime(10, 2, 0.0), 10, 2);
  REQUIRE(above.size() == 1);
  CHECK(above[0] == join(complete_graph(2), empty_graph(8)));
}

TEST_CASE("predicted bound") {
  for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
    for (std::size_t beta = 1; beta <= 5; ++beta) {
      CHECK(predicted_bound(2 * beta, beta, alpha) == Approx((alpha + 1) * (2 * beta - 1)));
    }
  }
  CHECK(predicted_bound(7, 2, 0.0) == Approx(4.0));
  CHECK(predicted_bound(10, 2, 0.0) == Approx((1.0 + std::sqrt(65.0)) / 2).epsilon(1e-12));
}

TEST_CASE("bound is continuous at integer thresholds") {
  for (std::size_t beta = 1; beta <= 10; ++beta) {
    CHECK(std::abs(2.0 * beta - closed_form_complete_split(3 * beta + 2, beta, 0.0)) <= 1e-9);
    if (beta % 2 == 1) {
      const std::size_t n = (5 * beta + 3) / 2;
      CHECK(std::abs(4.0 * beta - closed_form_complete_split(n, beta, 1.0)) <= 1e-9);
    }
  }
}

TEST_CASE("predicted graphs realise the bound") {
  for (const Alpha& alpha : {Alpha(0.0), Alpha::fraction(1, 2), Alpha(1.0), Alpha(2.0), Alpha::fraction(1, 3)}) {
    for (std::size_t n = 2; n <= 30; ++n) {
      for (std::size_t beta = 1; beta <= n / 2; ++beta) {
        const auto verdict = classify_regime(n, beta, alpha);
        const auto graphs = predicted_extremal_graphs(verdict, n, beta);
        REQUIRE(graphs.size() == verdict.extremal.size());
        for (const Graph& g : graphs) {
          CHECK(g.order() == n);
          CHECK(matching_number(g) == beta);
          CHECK(std::abs(spectral_radius(g, alpha.value()).rho - verdict.predicted_rho) <= 1e-8);
        }
        if (verdict.regime == Regime::Threshold) {
          CHECK(std::abs(spectral_radius(graphs[0], alpha.value()).rho -
                         spectral_radius(graphs[1], alpha.value()).rho) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("second branch flag") {
  // alpha = 2, beta = 10: n* = 74/3, and n + 2 - 20 - 20 < 0 below n = 38.
  CHECK(classify_regime(30, 10, 2.0).case2_branch);
  CHECK_FALSE(classify_regime(40, 10, 2.0).case2_branch);
  CHECK_FALSE(classify_regime(7, 2, 0.0).case2_branch);
}
