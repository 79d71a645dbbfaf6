#include "vecquad/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "vecquad/errors.hpp"

namespace vecquad {

Vec2 circ_mul(Vec2 a, Vec2 b) noexcept {
  return {a.x * b.x - a.y * b.y, a.x * b.y + b.x * a.y};
}

Vec2 hyp_mul(Vec2 a, Vec2 b) noexcept {
  return {a.x * b.x + a.y * b.y, a.x * b.y + b.x * a.y};
}

Vec2 circ_square(Vec2 z) noexcept { return {z.x * z.x - z.y * z.y, 2.0 * z.x * z.y}; }

Vec2 hyp_square(Vec2 z) noexcept { return {z.x * z.x + z.y * z.y, 2.0 * z.x * z.y}; }

Vec2 phs_mul(const PhsFunctional& f, Vec2 a, Vec2 b) {
  if (a == kOrigin || b == kOrigin) return kOrigin;
  // Normalize both factors by their largest component; the circular product of
  // the normalized pair cannot underflow, so the functional value below is
  // zero only for a genuinely degenerate functional.
  const double ma = std::max(std::fabs(a.x), std::fabs(a.y));
  const double mb = std::max(std::fabs(b.x), std::fabs(b.y));
  const Vec2 ah{a.x / ma, a.y / ma};
  const Vec2 bh{b.x / mb, b.y / mb};
  const Vec2 w = circ_mul(ah, bh);
  const double nw = f.eval(w);
  if (nw == 0.0) {
    throw DegenerateFunctionalError("phs_mul: functional vanishes on a nonzero product");
  }
  const double factor = f.eval(ah) * f.eval(bh) / nw;
  return scale(ma * mb * factor, w);
}

Algebra Algebra::parse(std::string_view spec) {
  if (spec == "circular") return circular();
  if (spec == "hyperbolic") return hyperbolic();
  if (spec.starts_with("phs:")) return phs(PhsFunctional::parse(spec.substr(4)));
  throw ParseError("unrecognized algebra spec '" + std::string(spec) +
                   "' (expected circular | hyperbolic | phs:<functional>)");
}

const PhsFunctional& Algebra::functional() const {
  if (!functional_) throw std::logic_error("Algebra::functional: not a phs algebra");
  return *functional_;
}

std::string Algebra::spec() const {
  switch (kind_) {
    case Kind::Circular:
      return "circular";
    case Kind::Hyperbolic:
      return "hyperbolic";
    case Kind::Phs:
      return "phs:" + functional_->spec();
  }
  return {};
}

Vec2 Algebra::mul(Vec2 a, Vec2 b) const {
  switch (kind_) {
    case Kind::Circular:
      return circ_mul(a, b);
    case Kind::Hyperbolic:
      return hyp_mul(a, b);
    case Kind::Phs:
      return phs_mul(*functional_, a, b);
  }
  return kOrigin;
}

Vec2 Algebra::square(Vec2 z) const {
  switch (kind_) {
    case Kind::Circular:
      return circ_square(z);
    case Kind::Hyperbolic:
      return hyp_square(z);
    case Kind::Phs:
      return phs_mul(*functional_, z, z);
  }
  return kOrigin;
}

Vec2 Algebra::eval_poly(QuadraticCoeffs c, Vec2 z) const {
  return add(add(square(z), scale(c.p, z)), scale(c.q, kE1));
}

}  // namespace vecquad
