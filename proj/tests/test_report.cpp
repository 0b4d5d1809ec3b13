#include "json.hpp"

#include "alpharad/report.hpp"
#include "alpharad/verifier.hpp"
#include "doctest.h"

using namespace alpharad;

TEST_CASE("report fields keep their order") {
  const auto report = exhaustive_max(5, 2, Alpha::fraction(1, 2));
  const auto j = to_json(report);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "beta", "alpha", "observed_max", "argmax_certificates",
                                         "predicted_max", "predicted_certificates", "value_pass",
                                         "structure_pass", "tol", "graphs_scanned", "wall_time"});
  CHECK(j["alpha"] == "1/2");
}

TEST_CASE("json lines round trip") {
  for (const char* alpha : {"0", "1/2", "1", "2", "0.3"}) {
    for (std::size_t beta = 1; beta <= 3; ++beta) {
      const auto report = exhaustive_max(6, beta, Alpha::parse(alpha));
      const std::string line = to_json_line(report);
      CHECK(line.find('\n') == std::string::npos);
      const auto back = report_from_json(nlohmann::json::parse(line));
      CHECK(back.n == report.n);
      CHECK(back.beta == report.beta);
      CHECK(back.alpha.to_string() == report.alpha.to_string());
      CHECK(back.alpha.value() == report.alpha.value());
      CHECK(back.observed_max == report.observed_max);
      CHECK(back.predicted_max == report.predicted_max);
      CHECK(back.argmax_certificates == report.argmax_certificates);
      CHECK(back.predicted_certificates == report.predicted_certificates);
      CHECK(back.value_pass == report.value_pass);
      CHECK(back.structure_pass == report.structure_pass);
      CHECK(back.tol == report.tol);
      CHECK(back.graphs_scanned == report.graphs_scanned);
      CHECK(back.wall_time == report.wall_time);
      CHECK(to_json_line(back) == line);
    }
  }
}

TEST_CASE("csv and human forms") {
  const auto report = exhaustive_max(5, 1, 0.0);
  CHECK(csv_header().rfind("n,beta,alpha,observed_max,", 0) == 0);
  const std::string row = to_csv_row(report);
  CHECK(row.rfind("5,1,0,2,", 0) == 0);
  CHECK(row.find("D?{;D@K") != std::string::npos);
  CHECK(to_human(report).rfind("PASS", 0) == 0);

  auto failed = report;
  failed.structure_pass = false;
  CHECK(to_human(failed).rfind("FAIL", 0) == 0);
}

TEST_CASE("descriptions") {
  CHECK(describe(Extremal::CompleteSplit, 10, 2) == "K_2 v complement(K_8)");
  CHECK(describe(Extremal::OddCliquePlusIsolates, 8, 2) == "K_5 u complement(K_3)");
  CHECK(describe(Extremal::Complete, 6, 3) == "K_6");
  CHECK(describe(make_join_family(1, {1, 3})) == "K_1 v (K_1 u K_3)");
}

TEST_CASE("verdict json") {
  const auto j = to_json(classify_regime(8, 2, 0.0), 8, 2, 0.0);
  CHECK(j["regime"] == "THRESHOLD");
  CHECK(j["case"] == 3);
  CHECK(j["n_star_exact"] == "8");
  CHECK(j["extremal"].size() == 2);
}
