// zeta-crucible: command-line front end for the verification suites.
//
//   zeta-crucible verify [--suites s1,s2] [--tol X] [--qmc-points 2^k] [--seed N]
//                        [--nmax N] [--format json|csv] [--out PATH]
//   zeta-crucible zeta --n N --method series|bernoulli-even|integral|cube [--tol X]
//   zeta-crucible jacobian-check --n N --samples K --seed S
//   zeta-crucible invariance --n N --boxes "a1,a2;b1,b2" --points 2^k

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crucible/cube_integrals.hpp"
#include "crucible/suite.hpp"

namespace {

using crucible::real;

// Accepts "65536" or "2^16".
std::uint64_t parse_count(const std::string& text) {
  const auto caret = text.find('^');
  try {
    if (caret == std::string::npos) return std::stoull(text);
    const unsigned long long base = std::stoull(text.substr(0, caret));
    const unsigned long long exponent = std::stoull(text.substr(caret + 1));
    if (base != 2 || exponent > 40) throw crucible::ConfigError("only 2^k with k <= 40 is accepted");
    return std::uint64_t{1} << exponent;
  } catch (const std::logic_error&) {
    throw crucible::ConfigError("cannot parse point count '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<crucible::BoxSpec> parse_boxes(const std::string& text, int n) {
  std::vector<crucible::BoxSpec> boxes;
  for (const std::string& box : split(text, ';')) {
    std::vector<real> edges;
    for (const std::string& edge : split(box, ',')) {
      try {
        edges.push_back(std::stold(edge));
      } catch (const std::logic_error&) {
        throw crucible::ConfigError("cannot parse box edge '" + edge + "'");
      }
    }
    if (static_cast<int>(edges.size()) != n - 1) {
      throw crucible::ConfigError("each box needs n - 1 = " + std::to_string(n - 1) + " edges");
    }
    boxes.emplace_back(std::move(edges));
  }
  if (boxes.empty()) throw crucible::ConfigError("--boxes lists no boxes");
  return boxes;
}

int emit(const crucible::VerificationReport& report, const std::string& format,
         const std::string& out_path, bool timing) {
  const std::string text =
      format == "csv" ? report.to_csv() : report.to_json(timing).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  if (!report.all_passed()) {
    std::cerr << report.failures() << " of " << report.entries().size() << " checks failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of integral representations of zeta(n)"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites and emit a report");
  std::string suites_arg, points_arg, format = "json", out_path;
  double tol = static_cast<double>(crucible::kReferenceTolerance);
  std::uint64_t seed = crucible::kDefaultQmcSeed;
  int n_max = 10;
  bool no_timing = false;
  verify->add_option("--suites", suites_arg,
                     "Comma-separated subset of series,bernoulli,jacobian,cube,pipeline,theorem5");
  verify->add_option("--tol", tol, "Reference tolerance; scales every suite default")
      ->check(CLI::PositiveNumber);
  verify->add_option("--qmc-points", points_arg, "QMC points per shift replicate (power of 2)");
  verify->add_option("--seed", seed, "Seed for QMC shifts and random samples");
  verify->add_option("--nmax", n_max, "Largest n for the series and integral checks");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  verify->add_flag("--no-timing", no_timing, "Omit runtime_ms from JSON output");

  // zeta
  auto* zeta = app.add_subcommand("zeta", "Evaluate zeta(n) by one method");
  int zeta_n = 2;
  std::string method = "integral";
  double zeta_tol = 1e-10;
  zeta->add_option("--n", zeta_n, "Order n >= 2")->required();
  zeta->add_option("--method", method, "series, bernoulli-even, integral or cube")->required();
  zeta->add_option("--tol", zeta_tol, "Absolute tolerance")->check(CLI::PositiveNumber);

  // jacobian-check
  auto* jac = app.add_subcommand("jacobian-check", "Check the substitution's Jacobian for one n");
  int jac_n = 3, samples = 100;
  std::uint64_t jac_seed = crucible::kDefaultQmcSeed;
  jac->add_option("--n", jac_n, "Dimension")->required();
  jac->add_option("--samples", samples, "Random points in (0, 3)^n");
  jac->add_option("--seed", jac_seed, "Random seed");

  // invariance
  auto* inv = app.add_subcommand("invariance", "QMC check that I_n(a) does not depend on a");
  int inv_n = 2;
  std::string boxes_arg, inv_points = "2^16";
  std::uint64_t inv_seed = crucible::kDefaultQmcSeed;
  inv->add_option("--n", inv_n, "Dimension")->required();
  inv->add_option("--boxes", boxes_arg, "Free edges per box, e.g. \"1,1;2,0.5\"")->required();
  inv->add_option("--points", inv_points, "QMC points per shift replicate");
  inv->add_option("--seed", inv_seed, "Seed for QMC shifts");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      crucible::SuiteConfig config;
      if (!suites_arg.empty()) {
        config.suites.clear();
        for (const auto& name : split(suites_arg, ',')) config.suites.insert(crucible::parse_suite(name));
      }
      config.tol = tol;
      if (!points_arg.empty()) config.qmc_points = parse_count(points_arg);
      config.qmc_seed = seed;
      config.n_max = n_max;
      return emit(crucible::run_suite(config), format, out_path, !no_timing);
    }
    if (zeta->parsed()) {
      const auto value =
          crucible::zeta_command(zeta_n, crucible::parse_zeta_method(method), zeta_tol);
      std::printf("zeta(%d) = %.17Lg +/- %.3Lg  [%s]\n", zeta_n, value.value, value.error_bound,
                  method.c_str());
      return 0;
    }
    if (jac->parsed()) {
      return emit(crucible::jacobian_check(jac_n, samples, jac_seed), "json", "", true);
    }
    if (inv->parsed()) {
      const auto boxes = parse_boxes(boxes_arg, inv_n);
      return emit(crucible::invariance_check(inv_n, boxes, parse_count(inv_points), inv_seed),
                  "json", "", true);
    }
  } catch (const crucible::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
