// Command-line front end: solve quadratics over the plane algebras, verify
// solver output against the brute-force grid, run the algebraic-law harness,
// and sample generalized circles as CSV.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vecquad/cli.hpp"
#include "vecquad/errors.hpp"

namespace {

using vecquad::cli::CliConfig;

void add_common(CLI::App* cmd, CliConfig& cfg, std::string& out_path) {
  cmd->add_option("--algebra,-a", cfg.algebra,
                  "circular | hyperbolic | phs:<functional> where <functional> is "
                  "euclidean | lp:<e> | wlp:<e>:<wx>:<wy> | max")
      ->capture_default_str();
  cmd->add_option("--out", out_path, "Write the report to this file instead of stdout");
}

void add_coeffs(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("-p", cfg.p, "Linear coefficient")->required();
  cmd->add_option("-q", cfg.q, "Constant coefficient")->required();
}

void add_solver_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--scan-intervals", cfg.solve.scan_intervals,
                  "Angle-scan subintervals of (0, 2pi)")
      ->capture_default_str();
  cmd->add_option("--phi-tol", cfg.solve.phi_tol, "Bisection width target (radians)")
      ->capture_default_str();
  cmd->add_option("--residual-tol", cfg.solve.residual_tol,
                  "Residual acceptance threshold for generalized roots")
      ->capture_default_str();
  cmd->add_option("--exclusion-radius", cfg.solve.exclusion_radius,
                  "Radius of the excluded neighborhoods of phi in {0, pi}")
      ->capture_default_str();
}

void add_grid_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--r-min", cfg.r_min, "Grid window inner radius")->capture_default_str();
  cmd->add_option("--r-max", cfg.r_max,
                  "Grid window outer radius (0 = derive from p, q)")
      ->capture_default_str();
  cmd->add_option("--r-steps", cfg.r_steps, "Radial grid steps")->capture_default_str();
  cmd->add_option("--phi-steps", cfg.phi_steps, "Angular grid steps")->capture_default_str();
}

int emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return vecquad::cli::kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return vecquad::cli::kExitParse;
  }
  file << payload;
  return vecquad::cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector quadratics over two-dimensional algebras"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string out_path;

  CLI::App* solve = app.add_subcommand("solve", "Solve z*z + p*z + q*(1,0) = 0");
  add_common(solve, cfg, out_path);
  add_coeffs(solve, cfg);
  add_solver_options(solve, cfg);

  CLI::App* verify =
      app.add_subcommand("verify", "Compare solver roots against the brute-force grid");
  add_common(verify, cfg, out_path);
  add_coeffs(verify, cfg);
  add_solver_options(verify, cfg);
  add_grid_options(verify, cfg);

  CLI::App* properties =
      app.add_subcommand("properties", "Run the randomized algebraic-law harness");
  add_common(properties, cfg, out_path);
  properties->add_option("--trials", cfg.trials, "Trials per law")->capture_default_str();
  properties->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

  CLI::App* curve = app.add_subcommand(
      "curve", "Sample the algebra's circle of a given radius as CSV");
  add_common(curve, cfg, out_path);
  curve->add_option("--radius", cfg.radius, "Circle radius")->capture_default_str();
  curve->add_option("--samples", cfg.samples, "Number of sample points")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? vecquad::cli::kExitOk : vecquad::cli::kExitParse;
  }

  try {
    if (solve->parsed()) return emit(vecquad::cli::run_solve(cfg), out_path);
    if (verify->parsed()) {
      const auto result = vecquad::cli::run_verify(cfg);
      const int code = emit(result.json, out_path);
      if (code != vecquad::cli::kExitOk) return code;
      return result.agreement ? vecquad::cli::kExitOk : vecquad::cli::kExitVerifyFailed;
    }
    if (properties->parsed()) return emit(vecquad::cli::run_properties(cfg), out_path);
    if (curve->parsed()) return emit(vecquad::cli::run_curve(cfg), out_path);
  } catch (const vecquad::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return vecquad::cli::kExitParse;
  } catch (const vecquad::UnsupportedRegimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return vecquad::cli::kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return vecquad::cli::kExitParse;
  }
  return vecquad::cli::kExitOk;
}
