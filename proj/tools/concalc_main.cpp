// concalc: verification suites and one-off evaluations for the contraction
// functional calculus.
//
//   concalc <suite> [--seed N] [--dims A..B] [--degrees A..B] [--cases N]
//           [--tol name=value]... [--out report.json] [--csv report.csv]
//   concalc eval --phi coeffs.json --t matrix.json
//   concalc besov-norm --phi trigpoly.json --s 1 --p inf --q 1
//
// Exit codes: 0 pass, 1 fail, 2 usage or malformed input.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "concalc/concalc.hpp"

namespace {

struct SuiteOptions {
  concalc::SuiteConfig config;
  std::string dims;
  std::string degrees;
  std::vector<std::string> tol_overrides;
  std::string out_path;
  std::string csv_path;
};

void parse_range(const std::string& text, int& lo, int& hi, const char* what) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw concalc::input_error(std::string(what) + ": expected A..B, got '" + text + "'");
  try {
    lo = std::stoi(text.substr(0, pos));
    hi = std::stoi(text.substr(pos + 2));
  } catch (const std::exception&) {
    throw concalc::input_error(std::string(what) + ": expected A..B, got '" + text + "'");
  }
}

void apply_options(SuiteOptions& opt) {
  if (!opt.dims.empty())
    parse_range(opt.dims, opt.config.dim_lo, opt.config.dim_hi, "--dims");
  if (!opt.degrees.empty())
    parse_range(opt.degrees, opt.config.deg_lo, opt.config.deg_hi, "--degrees");
  for (const auto& item : opt.tol_overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw concalc::input_error("--tol: expected name=value, got '" + item + "'");
    try {
      opt.config.tol[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw concalc::input_error("--tol: bad value in '" + item + "'");
    }
  }
}

concalc::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw concalc::input_error("cannot open " + path);
  concalc::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw concalc::input_error(path + ": " + e.what());
  }
  return j;
}

int run_one_suite(const std::string& name, SuiteOptions& opt) {
  apply_options(opt);
  const concalc::SuiteReport report = concalc::run_suite(name, opt.config);
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out) throw concalc::input_error("cannot open " + opt.out_path);
    out << concalc::report_json(report).dump(2) << '\n';
  }
  if (!opt.csv_path.empty()) concalc::emit_csv(report, opt.csv_path);
  std::printf("suite %-13s %s  records=%zu  max_residual=%.3e  (%.1f ms)\n",
              report.suite.c_str(), report.pass ? "PASS" : "FAIL",
              report.cases.size(), report.max_residual, report.wall_ms);
  if (!report.pass) {
    for (const auto& rec : report.cases)
      if (!rec.pass)
        std::printf("  FAIL %s residual=%.6e tolerance=%.6e\n", rec.case_id.c_str(),
                    rec.residual, rec.tolerance);
  }
  return report.pass ? 0 : 1;
}

double parse_pq(const std::string& text, const char* what) {
  if (text == "inf" || text == "Inf" || text == "INF") return concalc::kInf;
  try {
    const double v = std::stod(text);
    if (v < 1.0) throw std::out_of_range("pq");
    return v;
  } catch (const std::exception&) {
    throw concalc::input_error(std::string(what) + ": expected a number >= 1 or 'inf'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"functional calculus for Hilbert-space contractions"};
  app.require_subcommand(1);

  std::map<std::string, SuiteOptions> suite_opts;
  for (const std::string& name : concalc::suite_names()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " verification suite");
    auto& opt = suite_opts[name];
    sub->add_option("--seed", opt.config.seed, "RNG seed (default 42)");
    sub->add_option("--dims", opt.dims, "dimension range A..B (default 1..6)");
    sub->add_option("--degrees", opt.degrees, "degree range A..B (default 1..10)");
    sub->add_option("--cases", opt.config.cases, "number of cases (default 200)");
    sub->add_option("--tol", opt.tol_overrides, "tolerance override name=value");
    sub->add_option("--out", opt.out_path, "write the JSON report here");
    sub->add_option("--csv", opt.csv_path, "write the CSV report here");
  }

  std::string eval_phi, eval_t;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate phi(T) and print matrix JSON");
  eval_cmd->add_option("--phi", eval_phi, "AnalyticFunction JSON file")->required();
  eval_cmd->add_option("--t", eval_t, "matrix JSON file")->required();

  std::string bn_phi, bn_p = "inf", bn_q = "1";
  double bn_s = 1.0;
  int bn_grid = 0;
  auto* bn_cmd = app.add_subcommand("besov-norm", "Besov norm of a trig polynomial");
  bn_cmd->add_option("--phi", bn_phi, "TrigPolynomial JSON file")->required();
  bn_cmd->add_option("--s", bn_s, "smoothness s");
  bn_cmd->add_option("--p", bn_p, "L^p exponent (number or inf)");
  bn_cmd->add_option("--q", bn_q, "ell^q exponent (number or inf)");
  bn_cmd->add_option("--grid", bn_grid, "grid size (default 64*(M+1))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed()) {
      const concalc::AnalyticFunction phi =
          concalc::function_from_json(load_json(eval_phi));
      const concalc::ComplexMatrix t = concalc::matrix_from_json(load_json(eval_t));
      std::cout << concalc::matrix_to_json(concalc::eval_on_contraction(phi, t)).dump(2)
                << '\n';
      return 0;
    }
    if (bn_cmd->parsed()) {
      const concalc::TrigPolynomial phi =
          concalc::trigpoly_from_json(load_json(bn_phi));
      const double p = parse_pq(bn_p, "--p");
      const double q = parse_pq(bn_q, "--q");
      const double norm = bn_grid > 0 ? concalc::besov_norm(phi, bn_s, p, q, bn_grid)
                                      : concalc::besov_norm(phi, bn_s, p, q);
      std::printf("%.17g\n", norm);
      return 0;
    }
    for (auto& [name, opt] : suite_opts)
      if (app.get_subcommand(name)->parsed()) return run_one_suite(name, opt);
    std::fprintf(stderr, "no subcommand selected\n");
    return 2;
  } catch (const concalc::input_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const concalc::json::exception& e) {
    std::fprintf(stderr, "error: malformed input: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
