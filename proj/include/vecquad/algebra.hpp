#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vecquad/functionals.hpp"
#include "vecquad/vec2.hpp"

namespace vecquad {

/// Real pair (p, q) of the quadratic z*z + p*z + q*(1,0).
struct QuadraticCoeffs {
  double p = 0.0;
  double q = 0.0;

  /// p^2/4 - q; nonnegative exactly when the scalar quadratic has real roots.
  double discriminant() const noexcept { return p * p / 4.0 - q; }
};

/// Circle-preserving product: (x1*x2 - y1*y2, x1*y2 + x2*y1).
Vec2 circ_mul(Vec2 a, Vec2 b) noexcept;

/// Hyperbola-preserving product: (x1*x2 + y1*y2, x1*y2 + x2*y1).
Vec2 hyp_mul(Vec2 a, Vec2 b) noexcept;

/// Circle-preserving square: (x^2 - y^2, 2xy).
Vec2 circ_square(Vec2 z) noexcept;

/// Hyperbola-preserving square: (x^2 + y^2, 2xy).
Vec2 hyp_square(Vec2 z) noexcept;

/// Generalized product: the circular product rescaled by
/// ||a||*||b|| / ||a circ b|| so the functional's unit circle is preserved.
/// Zero exactly when an input is zero. Commutative, associative, and for the
/// euclidean functional identical to circ_mul.
Vec2 phs_mul(const PhsFunctional& f, Vec2 a, Vec2 b);

/// Which product is in force. Parsed from
///   circular | hyperbolic | phs:<functional-spec>
class Algebra {
 public:
  enum class Kind { Circular, Phs, Hyperbolic };

  static Algebra circular() { return Algebra(Kind::Circular); }
  static Algebra hyperbolic() { return Algebra(Kind::Hyperbolic); }
  static Algebra phs(PhsFunctional f) { return Algebra(std::move(f)); }
  static Algebra parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  bool is_phs() const noexcept { return kind_ == Kind::Phs; }

  /// The functional backing a phs algebra. Throws std::logic_error otherwise.
  const PhsFunctional& functional() const;

  /// Normalized text form; parse(spec()) reproduces this algebra.
  std::string spec() const;

  Vec2 mul(Vec2 a, Vec2 b) const;

  /// The algebra's z times z; the phs square of the origin is the origin
  /// (continuity with the zero-product law).
  Vec2 square(Vec2 z) const;

  /// square(z) + p*z + q*(1,0). On the x-axis this is (x^2 + p x + q, 0)
  /// under every algebra kind.
  Vec2 eval_poly(QuadraticCoeffs c, Vec2 z) const;

 private:
  explicit Algebra(Kind kind) : kind_(kind) {}
  explicit Algebra(PhsFunctional f) : kind_(Kind::Phs), functional_(std::move(f)) {}

  Kind kind_;
  std::optional<PhsFunctional> functional_;
};

}  // namespace vecquad
