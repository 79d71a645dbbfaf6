#pragma once

// Shared helpers for the randomized checks: a uniform generator built straight
// from mt19937_64 bits (identical draws on every platform) and the input
// distributions the suites use.

#include <random>
#include <vector>

#include "vecquad/algebra.hpp"
#include "vecquad/functionals.hpp"
#include "vecquad/vec2.hpp"

namespace testsupport {

inline double u01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * u01(rng);
}

inline vecquad::Vec2 random_vec(std::mt19937_64& rng, double bound = 10.0) {
  while (true) {
    const vecquad::Vec2 z{uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
    if (vecquad::euclid_norm(z) >= 1e-6) return z;
  }
}

inline double vec_deviation(vecquad::Vec2 lhs, vecquad::Vec2 rhs) {
  return vecquad::euclid_norm(lhs - rhs) /
         (1.0 + vecquad::euclid_norm(lhs) + vecquad::euclid_norm(rhs));
}

// Every functional the text grammar can name, one of each kind plus the
// exponents the solver suites exercise.
inline std::vector<vecquad::PhsFunctional> catalog() {
  using vecquad::PhsFunctional;
  return {PhsFunctional::euclidean(),          PhsFunctional::lp(0.5),
          PhsFunctional::lp(1.0),              PhsFunctional::lp(1.5),
          PhsFunctional::lp(3.0),              PhsFunctional::max_norm(),
          PhsFunctional::weighted_lp(2, 2, 1)};
}

}  // namespace testsupport
