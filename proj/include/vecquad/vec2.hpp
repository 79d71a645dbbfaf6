#pragma once

#include <cmath>

namespace vecquad {

/// Point of the plane; the carrier of every algebra in this library.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr bool operator==(const Vec2&) const = default;
};

/// Additive zero.
inline constexpr Vec2 kOrigin{0.0, 0.0};
/// First basis vector (1,0); the multiplicative unit of all three products.
inline constexpr Vec2 kE1{1.0, 0.0};
/// Second basis vector (0,1).
inline constexpr Vec2 kE2{0.0, 1.0};

constexpr Vec2 add(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 scale(double s, Vec2 z) { return {s * z.x, s * z.y}; }

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return add(a, b); }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator-(Vec2 z) { return {-z.x, -z.y}; }
constexpr Vec2 operator*(double s, Vec2 z) { return scale(s, z); }
constexpr Vec2 operator*(Vec2 z, double s) { return scale(s, z); }

inline double euclid_norm(Vec2 z) { return std::sqrt(z.x * z.x + z.y * z.y); }

inline double distance(Vec2 a, Vec2 b) { return euclid_norm(a - b); }

inline bool is_finite(Vec2 z) { return std::isfinite(z.x) && std::isfinite(z.y); }

/// Polar angle of z wrapped into [0, 2*pi). The origin maps to 0.
inline double polar_angle(Vec2 z) {
  double phi = std::atan2(z.y, z.x);
  if (phi < 0.0) phi += 6.283185307179586476925286766559;
  return phi;
}

}  // namespace vecquad
