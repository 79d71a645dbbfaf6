#pragma once

#include <string>
#include <string_view>

#include "vecquad/vec2.hpp"

namespace vecquad {

/// Positively homogeneous functional whose unit disc is star-shaped about the
/// origin. Closed catalog, parsed from text:
///
///   euclidean | lp:<e> | wlp:<e>:<wx>:<wy> | max
///
/// The lp family evaluates (wx*|x|^e + wy*|y|^e)^(1/e) with 0 < e <= 64 and
/// positive weights; e < 1 gives an antinorm-style functional. All catalog
/// entries are positive definite, and the weighted family is rescaled at
/// construction so that ||(1,0)|| = 1. That keeps (1,0) the unit of the
/// rescaled vector product and pins ||z||^2 / ||z squared|| to 1 on the
/// x-axis, which the quadratic solvers rely on.
class PhsFunctional {
 public:
  enum class Kind { Euclidean, Lp, WeightedLp, Max };

  static PhsFunctional euclidean();
  static PhsFunctional lp(double exponent);
  static PhsFunctional weighted_lp(double exponent, double wx, double wy);
  static PhsFunctional max_norm();

  /// Parses the text grammar above. Throws ParseError on anything else,
  /// including exponents outside (0, 64] and non-positive weights.
  static PhsFunctional parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  double exponent() const noexcept { return exponent_; }

  /// Normalized text form; parse(spec()) reproduces this functional.
  std::string spec() const;

  /// ||z||. Zero only at the origin. Throws InvalidInputError when a
  /// component is not finite.
  double eval(Vec2 z) const;
  double operator()(Vec2 z) const { return eval(z); }

 private:
  PhsFunctional(Kind kind, double exponent, double wx, double wy);

  Kind kind_ = Kind::Euclidean;
  double exponent_ = 2.0;
  double inv_exponent_ = 0.5;
  double wx_ = 1.0;           // as given, for spec()
  double wy_ = 1.0;           // as given, for spec()
  double wy_over_wx_ = 1.0;   // normalized weight actually used by eval
};

/// N(phi) = ||(cos phi, sin phi)||; strictly positive and 2*pi-periodic.
double n_of_phi(const PhsFunctional& f, double phi);

/// Q*(phi) = N(phi)^2 / N(2*phi); identically 1 for the euclidean functional.
double q_star(const PhsFunctional& f, double phi);

/// Q(z) = ||z||^2 / ||z circularly squared||. Scale invariant; equals 1 on the
/// x-axis for the whole catalog. Throws std::domain_error at the origin (0/0).
double q_of_z(const PhsFunctional& f, Vec2 z);

}  // namespace vecquad
