#include "alpharad/report.hpp"

#include <sstream>

namespace alpharad {
namespace {

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ';';
    out += items[i];
  }
  return out;
}

std::string number(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["beta"] = r.beta;
  j["alpha"] = r.alpha.to_string();
  j["observed_max"] = r.observed_max;
  j["argmax_certificates"] = r.argmax_certificates;
  j["predicted_max"] = r.predicted_max;
  j["predicted_certificates"] = r.predicted_certificates;
  j["value_pass"] = r.value_pass;
  j["structure_pass"] = r.structure_pass;
  j["tol"] = r.tol;
  j["graphs_scanned"] = r.graphs_scanned;
  j["wall_time"] = r.wall_time;
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.n = j.at("n").get<std::size_t>();
  r.beta = j.at("beta").get<std::size_t>();
  r.alpha = Alpha::parse(j.at("alpha").get<std::string>());
  r.observed_max = j.at("observed_max").get<double>();
  r.argmax_certificates = j.at("argmax_certificates").get<std::vector<std::string>>();
  r.predicted_max = j.at("predicted_max").get<double>();
  r.predicted_certificates = j.at("predicted_certificates").get<std::vector<std::string>>();
  r.value_pass = j.at("value_pass").get<bool>();
  r.structure_pass = j.at("structure_pass").get<bool>();
  r.tol = j.at("tol").get<double>();
  r.graphs_scanned = j.at("graphs_scanned").get<std::size_t>();
  r.wall_time = j.at("wall_time").get<double>();
  return r;
}

std::string to_json_line(const VerificationReport& r) { return to_json(r).dump(); }

std::string csv_header() {
  return "n,beta,alpha,observed_max,argmax_certificates,predicted_max,predicted_certificates,value_pass,"
         "structure_pass,tol,graphs_scanned,wall_time";
}

std::string to_csv_row(const VerificationReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.beta << ',' << r.alpha.to_string() << ',' << number(r.observed_max) << ','
      << join_list(r.argmax_certificates) << ',' << number(r.predicted_max) << ','
      << join_list(r.predicted_certificates) << ',' << (r.value_pass ? "true" : "false") << ','
      << (r.structure_pass ? "true" : "false") << ',' << r.tol << ',' << r.graphs_scanned << ',' << r.wall_time;
  return out.str();
}

std::string to_human(const VerificationReport& r) {
  std::ostringstream out;
  out.precision(12);
  const bool pass = r.value_pass && r.structure_pass;
  out << (pass ? "PASS" : "FAIL") << "  n=" << r.n << " beta=" << r.beta << " alpha=" << r.alpha.to_string()
      << "  observed=" << r.observed_max << " predicted=" << r.predicted_max << "  argmax={"
      << join_list(r.argmax_certificates) << "} predicted={" << join_list(r.predicted_certificates)
      << "}  value=" << (r.value_pass ? "ok" : "MISMATCH") << " structure=" << (r.structure_pass ? "ok" : "MISMATCH")
      << "  scanned=" << r.graphs_scanned;
  return out.str();
}

std::string describe(Extremal kind, std::size_t n, std::size_t beta) {
  switch (kind) {
    case Extremal::Empty: return "complement(K_" + std::to_string(n) + ")";
    case Extremal::Complete: return "K_" + std::to_string(n);
    case Extremal::OddCliquePlusIsolates:
      return "K_" + std::to_string(2 * beta + 1) + " u complement(K_" + std::to_string(n - 2 * beta - 1) + ")";
    case Extremal::CompleteSplit:
      return "K_" + std::to_string(beta) + " v complement(K_" + std::to_string(n - beta) + ")";
  }
  return "?";
}

std::string describe(const JoinFamily& family) {
  std::ostringstream out;
  out << "K_" << family.s << " v (";
  for (std::size_t i = 0; i < family.parts.size(); ++i) {
    if (i > 0) out << " u ";
    out << "K_" << family.parts[i];
  }
  out << ")";
  return out.str();
}

nlohmann::ordered_json to_json(const RegimeVerdict& v, std::size_t n, std::size_t beta, const Alpha& alpha) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["beta"] = beta;
  j["alpha"] = alpha.to_string();
  j["case"] = v.case_number;
  j["regime"] = std::string(to_string(v.regime));
  j["n_star"] = v.n_star;
  j["n_star_exact"] = v.n_star_exact ? nlohmann::ordered_json(v.n_star_exact->to_string()) : nlohmann::ordered_json();
  j["predicted_rho"] = v.predicted_rho;
  auto& list = j["extremal"] = nlohmann::ordered_json::array();
  for (auto kind : v.extremal) {
    list.push_back({{"descriptor", std::string(to_string(kind))}, {"graph", describe(kind, n, beta)}});
  }
  j["case2_branch"] = v.case2_branch;
  return j;
}

nlohmann::ordered_json to_json(const FamilySearchResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["beta"] = r.beta;
  j["alpha"] = r.alpha.to_string();
  j["best_s"] = r.best.family.s;
  j["best_parts"] = r.best.family.parts;
  j["best_family"] = describe(r.best.family);
  j["rho"] = r.best.rho;
  j["predicted_max"] = r.predicted_max;
  auto& per_s = j["best_per_s"] = nlohmann::ordered_json::array();
  for (const auto& c : r.best_per_s) per_s.push_back({{"s", c.family.s}, {"parts", c.family.parts}, {"rho", c.rho}});
  j["extremal_structure"] = r.extremal_structure;
  j["matches_prediction"] = r.matches_prediction;
  j["families_scanned"] = r.families_scanned;
  return j;
}

}  // namespace alpharad
