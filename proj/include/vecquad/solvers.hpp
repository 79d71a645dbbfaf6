#pragma once

#include <optional>
#include <vector>

#include "vecquad/algebra.hpp"

namespace vecquad {

enum class RootKind { RealAxis, Accompanied };

struct Root {
  Vec2 z;
  RootKind kind = RootKind::RealAxis;
  /// Euclidean norm of eval_poly at z, recomputed from (algebra, coeffs, z).
  double residual = 0.0;
  /// Hyperbolic roots only: whether |y| < x.
  std::optional<bool> hyp_domain_ok;
  /// Generalized accompanied roots with p != 0 only: membership of the circle
  /// (x + q/p)^2 + y^2 = (q/p)^2 within kLocusRelTol relative.
  std::optional<bool> locus_ok;
};

/// Accompanied root in polar form; phi lies in (0, 2*pi) excluding pi.
struct PolarSolution {
  double r = 0.0;
  double phi = 0.0;
};

struct RootReport {
  Algebra algebra = Algebra::circular();
  QuadraticCoeffs coeffs;
  double discriminant = 0.0;  // p^2/4 - q
  /// Deduplicated (no two roots within kRootDedupDistance), sorted by polar
  /// angle ascending, then kind, then components.
  std::vector<Root> roots;
  /// Polar form of the accompanied roots, when the solver produces one.
  std::vector<PolarSolution> polar;
  /// Closed-form nonexistence certificate (real and hyperbolic cases only).
  bool no_solution_certified = false;
};

struct SolveOptions {
  /// Uniform subintervals of (0, 2*pi) scanned for sign changes of the polar
  /// root equation.
  int scan_intervals = 4096;
  /// Bisection stops once the bracket is narrower than this (radians).
  double phi_tol = 1e-14;
  /// Acceptance threshold on the Cartesian residual of generalized roots.
  double residual_tol = 1e-9;
  /// Neighborhoods of phi in {0, pi} excluded from the scan; the real-axis
  /// branch covers those directions in closed form.
  double exclusion_radius = 1e-6;
  /// Search for off-axis roots. Requires q > 0; with the search disabled any
  /// (p, q) is accepted and only real-axis roots are reported.
  bool accompanied = true;
};

/// Roots merged when closer than this (the smaller residual wins).
inline constexpr double kRootDedupDistance = 1e-9;
/// Relative tolerance of the circle-locus check behind Root::locus_ok.
inline constexpr double kLocusRelTol = 1e-8;

/// Scalar baseline: x^2 + p x + q = 0 embedded on the x-axis. Roots
/// -p/2 -+ sqrt(p^2/4 - q) when the discriminant is nonnegative, otherwise an
/// empty report with no_solution_certified set.
RootReport solve_real(QuadraticCoeffs c);

/// Circle algebra, closed form. q - p^2/4 > 0 gives the accompanied pair
/// (-p/2, -+sqrt(q - p^2/4)) together with its polar form; otherwise the
/// real-axis roots.
RootReport solve_circular(QuadraticCoeffs c);

/// Polar form of the circular accompanied pair: r = sqrt(q),
/// cos phi = -p/(2 sqrt(q)). Requires q - p^2/4 > 0 and q > 0; throws
/// ConditionNotMetError otherwise.
std::vector<PolarSolution> circular_polar(QuadraticCoeffs c);

/// Generalized algebra. Real-axis roots come from the scalar baseline (the
/// catalog functionals all evaluate x-axis squares exactly); accompanied roots
/// come from scanning the polar equation Q*(phi) cos^2 phi = p^2/(4q) and
/// mapping each accepted angle through r = sqrt(q N(2 phi)) / N(phi). Throws
/// UnsupportedRegimeError when the accompanied search is requested with q <= 0.
RootReport solve_phs(const PhsFunctional& f, QuadraticCoeffs c,
                     const SolveOptions& opts = {});

/// Hyperbola algebra, closed form. q - p^2/4 > 0 certifies nonexistence;
/// otherwise both the real-axis pair and the accompanied pair
/// (-p/2, -+sqrt(p^2/4 - q)) are returned, each flagged with |y| < x.
RootReport solve_hyperbolic(QuadraticCoeffs c);

/// All angles in (0, 2*pi) minus the excluded neighborhoods of {0, pi} where
/// g(phi) = Q*(phi) cos^2 phi - p^2/(4q) vanishes, found by a uniform scan,
/// bracket bisection, and golden-section refinement of tangential extrema.
/// Sorted ascending; deterministic given opts. Requires q > 0.
std::vector<double> find_phi_roots(const PhsFunctional& f, QuadraticCoeffs c,
                                   const SolveOptions& opts = {});

}  // namespace vecquad
