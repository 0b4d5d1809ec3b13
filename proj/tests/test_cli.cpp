#include <sstream>

#include "json.hpp"

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = alpharad::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

const std::string kK4 = "4 6;0 1;0 2;0 3;1 2;1 3;2 3";

}  // namespace

TEST_CASE("rho") {
  auto k4 = run({"rho", "--alpha", "1", "--input", kK4});
  CHECK(k4.code == 0);
  CHECK(first_line(k4.out) == "6.00000000000");

  auto star = run({"rho", "--input", "4 3;0 1;0 2;0 3"});
  CHECK(star.code == 0);
  CHECK(first_line(star.out) == "1.73205080757");

  auto empty = run({"rho", "--input", "3 0"});
  CHECK(empty.code == 0);
  CHECK(first_line(empty.out) == "0");

  auto g6 = run({"rho", "--alpha", "1/2", "--graph6", "D?{"});
  CHECK(g6.code == 0);
}

TEST_CASE("rho reports parse errors with a location") {
  auto bad = run({"rho", "--input", "3 2;0 1;1 7"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("3") != std::string::npos);
  CHECK(run({"rho", "--graph6", "D?"}).code == 2);
  CHECK(run({"rho", "--alpha", "-1", "--input", kK4}).code == 2);
  CHECK(run({"rho", "--tol", "0", "--input", kK4}).code == 2);
  CHECK(run({"rho", "--format", "xml", "--input", kK4}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("rho json round trip") {
  auto r = run({"rho", "--alpha", "1", "--format", "json-lines", "--input", kK4});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(first_line(r.out));
  CHECK(j["rho"].get<double>() == doctest::Approx(6.0));
  CHECK(j["alpha"] == "1");
}

TEST_CASE("bound") {
  auto tie = run({"bound", "8", "2", "--alpha", "0"});
  CHECK(tie.code == 0);
  CHECK(tie.out.find("THRESHOLD") != std::string::npos);
  CHECK(tie.out.find("4.00000000000") != std::string::npos);
  CHECK(tie.out.find("COMPLETE_SPLIT") != std::string::npos);
  CHECK(tie.out.find("ODD_CLIQUE_PLUS_ISOLATES") != std::string::npos);

  auto above = run({"bound", "10", "2"});
  CHECK(above.out.find("ABOVE") != std::string::npos);
  CHECK(above.out.find("4.53112887415") != std::string::npos);

  auto full = run({"bound", "5", "2"});
  CHECK(full.out.find("case (1) FULL") != std::string::npos);
  CHECK(full.out.find("4.00000000000") != std::string::npos);

  CHECK(run({"bound", "5", "3"}).code == 2);
}

TEST_CASE("classify") {
  auto r = run({"classify", "9", "3", "--alpha", "1", "--format", "json-lines"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(first_line(r.out));
  CHECK(j["regime"] == "THRESHOLD");
  CHECK(j["predicted_rho"].get<double>() == doctest::Approx(12.0));
}

TEST_CASE("verify") {
  auto six = run({"verify", "6", "--alpha", "0"});
  CHECK(six.code == 0);
  CHECK(six.out.find("FAIL") == std::string::npos);
  CHECK(six.out.find("beta=3") != std::string::npos);

  auto seven = run({"verify", "7", "--alpha", "1", "--format", "json-lines"});
  CHECK(seven.code == 0);
  std::istringstream lines(seven.out);
  std::string line;
  int records = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["value_pass"] == true);
    CHECK(j["structure_pass"] == true);
    CHECK(nlohmann::json::parse(j.dump()) == j);
    ++records;
  }
  CHECK(records == 3);

  auto nine = run({"verify", "9"});
  CHECK(nine.code == 2);
  CHECK_FALSE(nine.err.empty());
}

TEST_CASE("family and report") {
  CHECK(run({"family", "12", "3", "--alpha", "1"}).code == 0);
  CHECK(run({"family", "6", "3"}).code == 2);
  auto rep = run({"report", "--min-n", "2", "--max-n", "5", "--alphas", "0,1", "--format", "csv"});
  CHECK(rep.code == 0);
  CHECK(rep.out.rfind("n,beta,alpha", 0) == 0);
}

TEST_CASE("help") {
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("--jobs") != std::string::npos);
  CHECK(help.out.find("ALPHARAD_JOBS") != std::string::npos);
}
