#pragma once

#include <cstdint>
#include <string>

#include "vecquad/oracle.hpp"

namespace vecquad::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitVerifyFailed = 4;

struct CliConfig {
  std::string algebra = "circular";
  double p = 0.0;
  double q = 0.0;
  SolveOptions solve;
  // Grid window; r_max <= 0 means "derive from (p, q)".
  double r_min = 1e-2;
  double r_max = 0.0;
  int r_steps = 512;
  int phi_steps = 2048;
  int refine_iters = 60;
  // Law harness.
  int trials = 1000;
  std::uint64_t seed = 1;
  // Curve sampling.
  double radius = 1.0;
  int samples = 1024;
};

/// JSON root report. Throws ParseError / UnsupportedRegimeError upward.
std::string run_solve(const CliConfig& cfg);

struct VerifyResult {
  std::string json;
  bool agreement = false;
};

/// Solver roots against grid findings: every root must sit within 1e-6 of a
/// finding with residual below 1e-4, and every finding with residual below
/// 1e-6 must sit within 1e-4 of a root.
VerifyResult run_verify(const CliConfig& cfg);

/// JSON law report for the requested algebra.
std::string run_properties(const CliConfig& cfg);

/// CSV (header phi,x,y) sampling the generalized circle of the given radius,
/// or the hyperbolic half circle parameterized over t in [-3, 3].
std::string run_curve(const CliConfig& cfg);

}  // namespace vecquad::cli
