#include "vecquad/cli.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "vecquad/errors.hpp"

namespace vecquad::cli {

namespace {

// Reports are emitted by hand: keys in a fixed order and numbers printed with
// 17 significant digits, so every double round-trips and repeated runs are
// byte-identical.
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string num(int v) { return std::to_string(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }

std::string str(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

const char* kind_name(RootKind k) {
  return k == RootKind::RealAxis ? "real-axis" : "accompanied";
}

void append_roots(std::string& out, const RootReport& report) {
  out += "\"roots\":[";
  bool first = true;
  for (const Root& root : report.roots) {
    if (!first) out += ",";
    first = false;
    out += "{\"x\":" + num(root.z.x) + ",\"y\":" + num(root.z.y) +
           ",\"kind\":" + str(kind_name(root.kind)) +
           ",\"residual\":" + num(root.residual);
    if (root.hyp_domain_ok) {
      out += std::string(",\"hyp_domain_ok\":") + boolean(*root.hyp_domain_ok);
    }
    if (root.locus_ok) {
      out += std::string(",\"locus_ok\":") + boolean(*root.locus_ok);
    }
    out += "}";
  }
  out += "],\"polar\":[";
  first = true;
  for (const PolarSolution& sol : report.polar) {
    if (!first) out += ",";
    first = false;
    out += "{\"r\":" + num(sol.r) + ",\"phi\":" + num(sol.phi) + "}";
  }
  out += "]";
}

RootReport dispatch_solve(const Algebra& alg, const CliConfig& cfg) {
  const QuadraticCoeffs c{cfg.p, cfg.q};
  switch (alg.kind()) {
    case Algebra::Kind::Circular:
      return solve_circular(c);
    case Algebra::Kind::Hyperbolic:
      return solve_hyperbolic(c);
    case Algebra::Kind::Phs:
      return solve_phs(alg.functional(), c, cfg.solve);
  }
  throw std::logic_error("dispatch_solve: unreachable");
}

GridSpec grid_from(const CliConfig& cfg) {
  GridSpec grid = GridSpec::default_for({cfg.p, cfg.q});
  grid.r_min = cfg.r_min;
  if (cfg.r_max > 0.0) grid.r_max = cfg.r_max;
  grid.r_steps = cfg.r_steps;
  grid.phi_steps = cfg.phi_steps;
  grid.refine_iters = cfg.refine_iters;
  return grid;
}

void validate_coeffs(const CliConfig& cfg) {
  if (!std::isfinite(cfg.p) || !std::isfinite(cfg.q)) {
    throw ParseError("coefficients p and q must be finite");
  }
}

}  // namespace

std::string run_solve(const CliConfig& cfg) {
  validate_coeffs(cfg);
  const Algebra alg = Algebra::parse(cfg.algebra);
  const RootReport report = dispatch_solve(alg, cfg);
  std::string out = "{\"format\":1,\"algebra\":" + str(alg.spec()) +
                    ",\"p\":" + num(cfg.p) + ",\"q\":" + num(cfg.q) +
                    ",\"discriminant\":" + num(report.discriminant) + ",";
  append_roots(out, report);
  out += std::string(",\"no_solution_certified\":") +
         boolean(report.no_solution_certified) + "}\n";
  return out;
}

VerifyResult run_verify(const CliConfig& cfg) {
  validate_coeffs(cfg);
  const Algebra alg = Algebra::parse(cfg.algebra);
  const RootReport report = dispatch_solve(alg, cfg);
  const GridSpec grid = grid_from(cfg);
  const auto findings = grid_search(alg, {cfg.p, cfg.q}, grid);

  bool solver_to_grid = true;
  for (const Root& root : report.roots) {
    bool matched = false;
    for (const GridFinding& finding : findings) {
      if (finding.residual < 1e-4 && distance(root.z, finding.z) <= 1e-6) {
        matched = true;
        break;
      }
    }
    if (!matched) solver_to_grid = false;
  }
  bool grid_to_solver = true;
  double min_residual = std::numeric_limits<double>::infinity();
  for (const GridFinding& finding : findings) {
    min_residual = std::min(min_residual, finding.residual);
    if (finding.residual >= 1e-6) continue;
    bool matched = false;
    for (const Root& root : report.roots) {
      if (distance(root.z, finding.z) <= 1e-4) {
        matched = true;
        break;
      }
    }
    if (!matched) grid_to_solver = false;
  }
  const bool agreement = solver_to_grid && grid_to_solver;

  std::string out = "{\"format\":1,\"algebra\":" + str(alg.spec()) +
                    ",\"p\":" + num(cfg.p) + ",\"q\":" + num(cfg.q) +
                    ",\"discriminant\":" + num(report.discriminant) + ",";
  append_roots(out, report);
  out += std::string(",\"no_solution_certified\":") +
         boolean(report.no_solution_certified);
  out += ",\"grid\":{\"r_min\":" + num(grid.r_min) + ",\"r_max\":" + num(grid.r_max) +
         ",\"r_steps\":" + num(grid.r_steps) + ",\"phi_steps\":" + num(grid.phi_steps) +
         ",\"refine_iters\":" + num(grid.refine_iters) + ",\"findings\":[";
  bool first = true;
  for (const GridFinding& finding : findings) {
    if (!first) out += ",";
    first = false;
    out += "{\"x\":" + num(finding.z.x) + ",\"y\":" + num(finding.z.y) +
           ",\"residual\":" + num(finding.residual) +
           ",\"r_index\":" + num(finding.r_index) +
           ",\"phi_index\":" + num(finding.phi_index) + "}";
  }
  out += "],\"min_residual\":" +
         (findings.empty() ? std::string("null") : num(min_residual)) + "}";
  out += std::string(",\"agreement\":{\"solver_to_grid\":") + boolean(solver_to_grid) +
         ",\"grid_to_solver\":" + boolean(grid_to_solver) +
         ",\"pass\":" + boolean(agreement) + "}}\n";
  return {out, agreement};
}

std::string run_properties(const CliConfig& cfg) {
  const Algebra alg = Algebra::parse(cfg.algebra);
  const LawReport report = check_laws(alg, cfg.trials, cfg.seed);
  std::string out = "{\"format\":1,\"algebra\":" + str(report.algebra_spec) +
                    ",\"trials\":" + num(report.trials) + ",\"seed\":" + num(report.seed) +
                    ",\"tolerance\":" + num(report.tolerance) + ",\"laws\":[";
  bool first = true;
  for (const LawCheck& check : report.laws) {
    if (!first) out += ",";
    first = false;
    out += "{\"law\":" + str(check.law) + ",\"trials\":" + num(check.trials) +
           ",\"passes\":" + num(check.passes) +
           ",\"worst_deviation\":" + num(check.worst_deviation) + "}";
  }
  out += std::string("],\"all_pass\":") + boolean(report.all_pass()) + "}\n";
  return out;
}

std::string run_curve(const CliConfig& cfg) {
  const Algebra alg = Algebra::parse(cfg.algebra);
  if (!(cfg.radius > 0.0) || !std::isfinite(cfg.radius)) {
    throw ParseError("curve: radius must be positive and finite");
  }
  if (cfg.samples < 2) throw ParseError("curve: samples must be >= 2");

  std::string out = "phi,x,y\n";
  if (alg.kind() == Algebra::Kind::Hyperbolic) {
    // Half circle x^2 - y^2 = r^2, x > 0, parameterized over t in [-3, 3];
    // the first column carries the parameter.
    for (int k = 0; k < cfg.samples; ++k) {
      const double t = -3.0 + 6.0 * k / (cfg.samples - 1);
      out += num(t) + "," + num(cfg.radius * std::cosh(t)) + "," +
             num(cfg.radius * std::sinh(t)) + "\n";
    }
    return out;
  }
  const PhsFunctional f = alg.kind() == Algebra::Kind::Phs
                              ? alg.functional()
                              : PhsFunctional::euclidean();
  for (int k = 0; k < cfg.samples; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / cfg.samples;
    const double cs = std::cos(phi);
    const double sn = std::sin(phi);
    const double rho = cfg.radius / f.eval({cs, sn});
    out += num(phi) + "," + num(rho * cs) + "," + num(rho * sn) + "\n";
  }
  return out;
}

}  // namespace vecquad::cli
