#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vecquad/solvers.hpp"

namespace vecquad {

/// Polar window and resolution of the brute-force search.
struct GridSpec {
  double r_min = 1e-2;
  double r_max = 4.0;
  int r_steps = 512;
  int phi_steps = 2048;
  int refine_iters = 60;

  /// Window r in [1e-2, 2(1 + |p| + sqrt(|q|))] at the default resolution.
  /// Every closed-form root lies inside it.
  static GridSpec default_for(QuadraticCoeffs c);
};

struct GridFinding {
  Vec2 z;
  double residual = 0.0;
  int r_index = 0;    // grid cell the refinement started from
  int phi_index = 0;
};

/// Euclidean norm of eval_poly at z.
double residual(const Algebra& alg, QuadraticCoeffs c, Vec2 z);

/// Local minima of the residual over the (r, phi) grid, each refined by
/// refine_iters rounds of coordinate-wise golden-section shrink inside its
/// neighboring cells. Sorted by residual ascending; fully deterministic.
std::vector<GridFinding> grid_search(const Algebra& alg, QuadraticCoeffs c,
                                     const GridSpec& grid);

struct LawCheck {
  std::string law;
  int trials = 0;
  int passes = 0;
  double worst_deviation = 0.0;
};

/// Outcome of the randomized algebraic-law harness. Deviations are measured
/// as |lhs - rhs| / (1 + |lhs| + |rhs|) so the 1e-12 bar is meaningful across
/// the sampled magnitude range.
struct LawReport {
  std::string algebra_spec;
  int trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<LawCheck> laws;

  bool all_pass() const;
};

/// Checks, per algebra: commutativity, associativity, the scaling law (split
/// into lambda,mu >= 0 and general real), the zero-product law, and the
/// matching closure law (Euclidean circles, hyperbolic half circles, or the
/// functional's unit circle). Inputs are uniform in [-10, 10]^2 away from the
/// origin; hyperbolic closure draws from the half circles directly.
/// Deterministic given the seed.
LawReport check_laws(const Algebra& alg, int trials, std::uint64_t seed,
                     double tolerance = 1e-12);

}  // namespace vecquad
