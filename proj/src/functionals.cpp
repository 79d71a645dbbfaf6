#include "vecquad/functionals.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <system_error>

#include "vecquad/algebra.hpp"
#include "vecquad/errors.hpp"

namespace vecquad {

namespace {

constexpr double kMaxExponent = 64.0;

double parse_number(std::string_view token, const char* what) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw ParseError(std::string("functional spec: bad ") + what + " '" +
                     std::string(token) + "'");
  }
  return value;
}

std::string format_number(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  assert(ec == std::errc{});
  return std::string(buf, ptr);
}

void check_exponent(double e) {
  if (!(e > 0.0) || e > kMaxExponent) {
    throw ParseError("functional spec: exponent must lie in (0, 64], got " +
                     format_number(e));
  }
}

void check_weight(double w, const char* name) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw ParseError(std::string("functional spec: weight ") + name +
                     " must be positive and finite");
  }
}

}  // namespace

PhsFunctional::PhsFunctional(Kind kind, double exponent, double wx, double wy)
    : kind_(kind),
      exponent_(exponent),
      inv_exponent_(1.0 / exponent),
      wx_(wx),
      wy_(wy),
      // Rescaling by the x-weight pins ||(1,0)|| to 1.
      wy_over_wx_(wy / wx) {}

PhsFunctional PhsFunctional::euclidean() {
  return PhsFunctional(Kind::Euclidean, 2.0, 1.0, 1.0);
}

PhsFunctional PhsFunctional::lp(double exponent) {
  check_exponent(exponent);
  return PhsFunctional(Kind::Lp, exponent, 1.0, 1.0);
}

PhsFunctional PhsFunctional::weighted_lp(double exponent, double wx, double wy) {
  check_exponent(exponent);
  check_weight(wx, "wx");
  check_weight(wy, "wy");
  return PhsFunctional(Kind::WeightedLp, exponent, wx, wy);
}

PhsFunctional PhsFunctional::max_norm() {
  return PhsFunctional(Kind::Max, 1.0, 1.0, 1.0);
}

PhsFunctional PhsFunctional::parse(std::string_view spec) {
  if (spec == "euclidean") return euclidean();
  if (spec == "max") return max_norm();
  if (spec.starts_with("lp:")) return lp(parse_number(spec.substr(3), "exponent"));
  if (spec.starts_with("wlp:")) {
    std::string_view rest = spec.substr(4);
    const auto colon1 = rest.find(':');
    const auto colon2 = colon1 == std::string_view::npos
                            ? std::string_view::npos
                            : rest.find(':', colon1 + 1);
    if (colon1 == std::string_view::npos || colon2 == std::string_view::npos ||
        rest.find(':', colon2 + 1) != std::string_view::npos) {
      throw ParseError("functional spec: wlp takes exactly three fields, got '" +
                       std::string(spec) + "'");
    }
    const double e = parse_number(rest.substr(0, colon1), "exponent");
    const double wx =
        parse_number(rest.substr(colon1 + 1, colon2 - colon1 - 1), "wx");
    const double wy = parse_number(rest.substr(colon2 + 1), "wy");
    return weighted_lp(e, wx, wy);
  }
  throw ParseError("unrecognized functional spec '" + std::string(spec) + "'");
}

std::string PhsFunctional::spec() const {
  switch (kind_) {
    case Kind::Euclidean:
      return "euclidean";
    case Kind::Max:
      return "max";
    case Kind::Lp:
      return "lp:" + format_number(exponent_);
    case Kind::WeightedLp:
      return "wlp:" + format_number(exponent_) + ":" + format_number(wx_) + ":" +
             format_number(wy_);
  }
  return {};
}

double PhsFunctional::eval(Vec2 z) const {
  if (!is_finite(z)) throw InvalidInputError("PhsFunctional::eval: non-finite input");
  const double ax = std::fabs(z.x);
  const double ay = std::fabs(z.y);
  switch (kind_) {
    case Kind::Max:
      return std::max(ax, ay);
    case Kind::Euclidean: {
      // Factored by the largest component so huge and tiny vectors evaluate
      // without overflow and homogeneity holds to rounding.
      const double m = std::max(ax, ay);
      if (m == 0.0) return 0.0;
      const double u = ax / m;
      const double v = ay / m;
      return m * std::sqrt(u * u + v * v);
    }
    case Kind::Lp:
    case Kind::WeightedLp: {
      const double m = std::max(ax, ay);
      if (m == 0.0) return 0.0;
      const double s = std::pow(ax / m, exponent_) +
                       wy_over_wx_ * std::pow(ay / m, exponent_);
      return m * std::pow(s, inv_exponent_);
    }
  }
  return 0.0;
}

double n_of_phi(const PhsFunctional& f, double phi) {
  return f.eval({std::cos(phi), std::sin(phi)});
}

double q_star(const PhsFunctional& f, double phi) {
  const double n = n_of_phi(f, phi);
  return n * n / n_of_phi(f, 2.0 * phi);
}

double q_of_z(const PhsFunctional& f, Vec2 z) {
  if (!is_finite(z)) throw InvalidInputError("q_of_z: non-finite input");
  if (z == kOrigin) throw std::domain_error("q_of_z: undefined at the origin (0/0)");
  // Scale invariant, so normalize by the largest component first; the squared
  // vector then cannot underflow to zero.
  const double m = std::max(std::fabs(z.x), std::fabs(z.y));
  const Vec2 zh{z.x / m, z.y / m};
  const double n = f.eval(zh);
  const double d = f.eval(circ_square(zh));
  if (d == 0.0) {
    throw DegenerateFunctionalError("q_of_z: functional vanishes on a nonzero square");
  }
  return n * n / d;
}

}  // namespace vecquad
