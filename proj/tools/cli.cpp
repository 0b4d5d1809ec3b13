#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "alpharad/graph_io.hpp"
#include "alpharad/matching.hpp"
#include "alpharad/report.hpp"
#include "alpharad/spectral.hpp"
#include "alpharad/theorem.hpp"
#include "alpharad/verifier.hpp"

namespace alpharad::cli {
namespace {

enum class Format { Human, JsonLines, Csv };

struct Config {
  std::string alpha_text = "0";
  Alpha alpha;
  double tol = kDefaultTolerance;
  std::string format_text = "human";
  Format format = Format::Human;
  std::string input;
  std::string graph6;
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("ALPHARAD_JOBS")) {
    try {
      const long value = std::stol(env);
      if (value >= 1) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void finalize(Config& c) {
  c.alpha = Alpha::parse(c.alpha_text);
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  if (c.format_text == "human") {
    c.format = Format::Human;
  } else if (c.format_text == "json-lines" || c.format_text == "jsonl") {
    c.format = Format::JsonLines;
  } else if (c.format_text == "csv") {
    c.format = Format::Csv;
  } else {
    throw UsageError("unknown --format '" + c.format_text + "' (human, json-lines, csv)");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool is_file(const std::string& path) {
  std::error_code ec;
  return !path.empty() && std::filesystem::is_regular_file(path, ec);
}

// --input is a path, "-" for stdin, or an inline edge list with ';' as line separator.
// --graph6 is a path to a graph6 file or a single inline graph6 string.
std::vector<Graph> load_graphs(const Config& c) {
  if (!c.input.empty() && !c.graph6.empty()) throw UsageError("use either --input or --graph6");
  if (!c.input.empty()) {
    std::string text;
    if (c.input == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else if (is_file(c.input)) {
      text = read_file(c.input);
    } else {
      text = c.input;
      for (auto& ch : text)
        if (ch == ';') ch = '\n';
    }
    return {parse_edge_list(text)};
  }
  if (!c.graph6.empty()) {
    if (is_file(c.graph6)) return read_graph6_file(c.graph6);
    return {parse_graph6(c.graph6)};
  }
  throw UsageError("a graph is required: --input or --graph6");
}

void add_common(CLI::App* app, Config& c, bool graph_input) {
  app->add_option("--alpha", c.alpha_text, "alpha >= 0 as p/q, integer or decimal")->capture_default_str();
  app->add_option("--tol", c.tol, "numeric tolerance")->capture_default_str();
  app->add_option("--format", c.format_text, "human, json-lines or csv")->capture_default_str();
  if (graph_input) {
    app->add_option("--input", c.input, "edge-list file, '-' for stdin, or inline list with ';' line breaks");
    app->add_option("--graph6", c.graph6, "graph6 file (one graph per line) or inline graph6 string");
  }
}

int cmd_rho(const Config& c, std::ostream& out) {
  auto graphs = load_graphs(c);
  if (c.format == Format::Csv) out << "graph6,n,alpha,rho,residual,iterations\n";
  for (const auto& g : graphs) {
    const auto r = spectral_radius(g, c.alpha.value(), c.tol);
    switch (c.format) {
      case Format::Human:
        out << format_value(r.rho) << '\n';
        out << "residual " << r.residual << " iterations " << r.iterations << '\n';
        break;
      case Format::JsonLines: {
        nlohmann::ordered_json j;
        j["graph6"] = to_graph6(g);
        j["n"] = g.order();
        j["alpha"] = c.alpha.to_string();
        j["rho"] = r.rho;
        j["residual"] = r.residual;
        j["iterations"] = r.iterations;
        out << j.dump() << '\n';
        break;
      }
      case Format::Csv:
        out << to_graph6(g) << ',' << g.order() << ',' << c.alpha.to_string() << ',' << format_value(r.rho) << ','
            << r.residual << ',' << r.iterations << '\n';
        break;
    }
  }
  return kExitOk;
}

int cmd_matching(const Config& c, std::ostream& out) {
  auto graphs = load_graphs(c);
  for (const auto& g : graphs) {
    const std::size_t beta = matching_number(g);
    nlohmann::ordered_json j;
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["beta"] = beta;
    j["perfect"] = has_perfect_matching(g);
    if (g.order() <= kWitnessOrderCap) {
      const auto w = tutte_berge_witness(g);
      j["witness"] = w.witness_set;
      j["s"] = w.s;
      j["odd_components"] = w.odd_components;
      j["q"] = w.q;
    }
    if (c.format == Format::Human) {
      out << "beta " << beta << (j["perfect"].get<bool>() ? " (perfect)" : "");
      if (j.contains("s")) {
        out << "  S={";
        bool first = true;
        for (auto v : j["witness"]) {
          out << (first ? "" : ",") << v.get<std::size_t>();
          first = false;
        }
        out << "} s=" << j["s"].get<std::size_t>() << " q=" << j["q"].get<std::size_t>();
      }
      out << '\n';
    } else {
      out << j.dump() << '\n';
    }
  }
  return kExitOk;
}

void print_verdict(const Config& c, std::size_t n, std::size_t beta, bool full, std::ostream& out) {
  const auto v = classify_regime(n, beta, c.alpha);
  if (c.format != Format::Human) {
    out << to_json(v, n, beta, c.alpha).dump() << '\n';
    return;
  }
  if (v.regime == Regime::Degenerate) {
    out << "degenerate (beta = 0)  bound " << format_value(0.0) << "  extremal: " << describe(Extremal::Empty, n, 0)
        << '\n';
    return;
  }
  out << "case (" << v.case_number << ") " << to_string(v.regime) << "  bound " << format_value(v.predicted_rho)
      << '\n';
  if (full) {
    out << "n* = " << (v.n_star_exact ? v.n_star_exact->to_string() : format_value(v.n_star)) << " ("
        << format_value(v.n_star) << ")\n";
    if (v.regime == Regime::Above) out << "second-branch region reached: " << (v.case2_branch ? "yes" : "no") << '\n';
  }
  for (auto kind : v.extremal) out << "extremal " << to_string(kind) << ": " << describe(kind, n, beta) << '\n';
}

std::vector<Graph> load_classes(const Config& c, std::size_t n) {
  if (!c.graph6.empty()) {
    if (!is_file(c.graph6)) throw UsageError("--graph6 must name a file for verify");
    auto graphs = read_graph6_file(c.graph6);
    for (const auto& g : graphs) {
      if (g.order() != n) {
        throw UsageError("graph6 file contains a graph of order " + std::to_string(g.order()) + ", expected " +
                         std::to_string(n));
      }
    }
    return graphs;
  }
  if (n > kEnumerationCap) {
    throw UsageError("order " + std::to_string(n) + " needs --graph6 (built-in enumeration stops at " +
                     std::to_string(kEnumerationCap) + ")");
  }
  return enumerate_graphs(n);
}

bool emit_reports(const Config& c, const std::vector<VerificationReport>& reports, bool header, std::ostream& out) {
  bool all = true;
  if (c.format == Format::Csv && header) out << csv_header() << '\n';
  for (const auto& r : reports) {
    all = all && r.value_pass && r.structure_pass;
    switch (c.format) {
      case Format::Human: out << to_human(r) << '\n'; break;
      case Format::JsonLines: out << to_json_line(r) << '\n'; break;
      case Format::Csv: out << to_csv_row(r) << '\n'; break;
    }
  }
  return all;
}

std::vector<VerificationReport> verify_order(const Config& c, std::size_t n, const Alpha& alpha,
                                             std::optional<std::size_t> only_beta) {
  const auto classes = load_classes(c, n);
  VerifyOptions options;
  options.tol = c.tol;
  options.jobs = c.jobs;
  std::vector<VerificationReport> reports;
  for (std::size_t beta = 1; beta <= n / 2; ++beta) {
    if (only_beta && *only_beta != beta) continue;
    reports.push_back(exhaustive_max(std::span<const Graph>(classes), n, beta, alpha, options));
  }
  return reports;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

std::string format_value(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", x);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"alpha-spectral radius and maximal radius over graphs with given matching number", "alpharad"};
  app.require_subcommand(1);
  Config c;
  c.jobs = default_jobs();
  app.add_option("--jobs", c.jobs, "worker threads for verification (default $ALPHARAD_JOBS or 1)")
      ->capture_default_str();

  auto* rho = app.add_subcommand("rho", "rho_alpha of a graph (power iteration)");
  add_common(rho, c, true);

  auto* matching = app.add_subcommand("matching", "matching number and Tutte-Berge witness");
  add_common(matching, c, true);

  std::size_t n = 0;
  std::size_t beta = 0;
  auto* bound = app.add_subcommand("bound", "maximal rho_alpha over graphs of order N with matching number BETA");
  add_common(bound, c, false);
  bound->add_option("n", n, "order")->required();
  bound->add_option("beta", beta, "matching number")->required();

  auto* classify = app.add_subcommand("classify", "regime, threshold and extremal graphs for (N, BETA)");
  add_common(classify, c, false);
  classify->add_option("n", n, "order")->required();
  classify->add_option("beta", beta, "matching number")->required();

  std::optional<std::size_t> verify_beta;
  auto* verify = app.add_subcommand("verify", "exhaustive check over all graphs of order N, one report per beta");
  double verify_tol = kVerifyTolerance;
  verify->add_option("--alpha", c.alpha_text, "alpha >= 0")->capture_default_str();
  verify->add_option("--tol", verify_tol, "value tolerance")->capture_default_str();
  verify->add_option("--format", c.format_text, "human, json-lines or csv")->capture_default_str();
  verify->add_option("--graph6", c.graph6, "graph6 file with one graph per isomorphism class of order N");
  verify->add_option("--beta", verify_beta, "only this matching number");
  verify->add_option("n", n, "order")->required();

  auto* family = app.add_subcommand("family", "best K_s v (K_n1 u ... u K_nq) for (N, BETA)");
  double family_tol = kVerifyTolerance;
  family->add_option("--alpha", c.alpha_text, "alpha >= 0")->capture_default_str();
  family->add_option("--tol", family_tol, "value tolerance")->capture_default_str();
  family->add_option("--format", c.format_text, "human, json-lines or csv")->capture_default_str();
  family->add_option("n", n, "order")->required();
  family->add_option("beta", beta, "matching number")->required();

  std::size_t min_n = 2;
  std::size_t max_n = 7;
  std::string alphas = "0,1/2,1,2";
  auto* report = app.add_subcommand("report", "verification reports for a range of orders and alphas");
  double report_tol = kVerifyTolerance;
  c.format_text = "human";
  report->add_option("--min-n", min_n, "smallest order")->capture_default_str();
  report->add_option("--max-n", max_n, "largest order (<= 8)")->capture_default_str();
  report->add_option("--alphas", alphas, "comma-separated alpha list")->capture_default_str();
  report->add_option("--tol", report_tol, "value tolerance")->capture_default_str();
  report->add_option("--format", c.format_text, "human, json-lines or csv")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) c.tol = verify_tol;
    if (family->parsed()) c.tol = family_tol;
    if (report->parsed()) c.tol = report_tol;
    finalize(c);

    if (rho->parsed()) return cmd_rho(c, out);
    if (matching->parsed()) return cmd_matching(c, out);
    if (bound->parsed()) {
      print_verdict(c, n, beta, false, out);
      return kExitOk;
    }
    if (classify->parsed()) {
      print_verdict(c, n, beta, true, out);
      return kExitOk;
    }
    if (verify->parsed()) {
      const auto reports = verify_order(c, n, c.alpha, verify_beta);
      return emit_reports(c, reports, true, out) ? kExitOk : kExitVerificationFailed;
    }
    if (family->parsed()) {
      const auto r = family_search(n, beta, c.alpha, c.tol);
      if (c.format == Format::Human) {
        out << "best " << describe(r.best.family) << "  s=" << r.best.family.s << "  rho "
            << format_value(r.best.rho) << '\n';
        for (const auto& cand : r.best_per_s) {
          out << "  s=" << cand.family.s << "  " << describe(cand.family) << "  rho " << format_value(cand.rho)
              << '\n';
        }
        out << "extremal partition shape: " << (r.extremal_structure ? "ok" : "MISMATCH")
            << "  prediction: " << (r.matches_prediction ? "ok" : "MISMATCH") << '\n';
      } else {
        out << to_json(r).dump() << '\n';
      }
      return r.extremal_structure && r.matches_prediction ? kExitOk : kExitVerificationFailed;
    }
    if (report->parsed()) {
      if (max_n > kEnumerationCap) throw UsageError("report covers orders up to " + std::to_string(kEnumerationCap));
      bool all = true;
      bool header = true;
      for (const auto& text : split(alphas, ',')) {
        const Alpha alpha = Alpha::parse(text);
        for (std::size_t order = min_n; order <= max_n; ++order) {
          all = emit_reports(c, verify_order(c, order, alpha, std::nullopt), header, out) && all;
          header = false;
        }
      }
      return all ? kExitOk : kExitVerificationFailed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace alpharad::cli
