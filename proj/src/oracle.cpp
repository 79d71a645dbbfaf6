#include "vecquad/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "vecquad/errors.hpp"

namespace vecquad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498948482;

// Uniform doubles straight from the engine bits, so reports do not depend on
// the standard library's distribution implementation.
double u01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * u01(rng);
}

double deviation(Vec2 lhs, Vec2 rhs) {
  return euclid_norm(lhs - rhs) / (1.0 + euclid_norm(lhs) + euclid_norm(rhs));
}

Vec2 random_vec(std::mt19937_64& rng) {
  // Components uniform in [-10, 10], rejecting near-zero vectors.
  while (true) {
    const Vec2 z{uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0)};
    if (euclid_norm(z) >= 1e-6) return z;
  }
}

}  // namespace

GridSpec GridSpec::default_for(QuadraticCoeffs c) {
  GridSpec grid;
  grid.r_max = 2.0 * (1.0 + std::fabs(c.p) + std::sqrt(std::fabs(c.q)));
  return grid;
}

double residual(const Algebra& alg, QuadraticCoeffs c, Vec2 z) {
  return euclid_norm(alg.eval_poly(c, z));
}

std::vector<GridFinding> grid_search(const Algebra& alg, QuadraticCoeffs c,
                                     const GridSpec& grid) {
  if (!(grid.r_min > 0.0) || !(grid.r_min < grid.r_max) || grid.r_steps < 16 ||
      grid.phi_steps < 16 || grid.refine_iters < 0) {
    throw InvalidInputError("grid_search: bad grid spec");
  }
  const int nr = grid.r_steps;
  const int np = grid.phi_steps;
  std::vector<double> rs(nr);
  const double dr = (grid.r_max - grid.r_min) / (nr - 1);
  for (int i = 0; i < nr; ++i) rs[i] = grid.r_min + i * dr;
  std::vector<double> cos_phi(np), sin_phi(np);
  const double dphi = kTwoPi / np;
  for (int j = 0; j < np; ++j) {
    cos_phi[j] = std::cos(j * dphi);
    sin_phi[j] = std::sin(j * dphi);
  }

  std::vector<double> res(static_cast<std::size_t>(nr) * np);
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < np; ++j) {
      const Vec2 z{rs[i] * cos_phi[j], rs[i] * sin_phi[j]};
      res[static_cast<std::size_t>(i) * np + j] = residual(alg, c, z);
    }
  }
  const auto at = [&](int i, int j) {
    return res[static_cast<std::size_t>(i) * np + ((j % np) + np) % np];
  };

  const auto value_at = [&](double r, double phi) {
    return residual(alg, c, {r * std::cos(phi), r * std::sin(phi)});
  };

  const auto line_min = [](const std::function<double(double)>& h, double lo,
                           double hi) {
    double c1 = hi - kInvPhi * (hi - lo);
    double d1 = lo + kInvPhi * (hi - lo);
    double hc = h(c1);
    double hd = h(d1);
    // Floored at the spacing of doubles so the loop terminates once the
    // bracket degenerates.
    const double tol =
        std::max(1e-3 * (hi - lo), 4e-16 * (std::fabs(lo) + std::fabs(hi) + 1.0));
    for (int it = 0; it < 60 && hi - lo > tol; ++it) {
      if (hc < hd) {
        hi = d1;
        d1 = c1;
        hd = hc;
        c1 = hi - kInvPhi * (hi - lo);
        hc = h(c1);
      } else {
        lo = c1;
        c1 = d1;
        hc = hd;
        d1 = lo + kInvPhi * (hi - lo);
        hd = h(d1);
      }
    }
    return 0.5 * (lo + hi);
  };

  // Slide r to the 1-D minimum along a frozen ray. Used both to polish the
  // axis columns, whose cusped functionals twist the 2-D neighbourhood, and
  // as one leg of the full refinement.
  const auto polish_ray = [&](double r_c, double phi, int rounds) {
    double r_w = dr;
    for (int iter = 0; iter < rounds; ++iter) {
      const double r_prev = r_c;
      r_c = line_min([&](double r) { return value_at(r, phi); },
                     std::max(r_c - r_w, 1e-9), r_c + r_w);
      r_w = std::clamp(std::max(4.0 * std::fabs(r_c - r_prev), 0.55 * r_w),
                       1e-13 * (1.0 + r_c), dr);
    }
    return r_c;
  };

  // Refine by alternating golden-section line minimizations, one per
  // coordinate, re-bracketed around the current best point each round. The
  // bracket widths follow the motion of the minimizer so curved or diagonal
  // residual valleys are tracked all the way in.
  const auto refine_cell = [&](int i, int j) {
    double r_c = rs[i];
    double p_c = j * dphi;
    // The functionals with kinks (max, lp with e < 1) produce creased
    // residual gutters; one sweep can stall partway down them, so stubborn
    // cells get a few fresh-width restarts from wherever they stopped.
    const double stall_bar = 1e-8 * (1.0 + std::fabs(c.p) + std::fabs(c.q));
    for (int sweep = 0; sweep < 6; ++sweep) {
      double r_w = dr;
      double p_w = dphi;
      for (int iter = 0; iter < grid.refine_iters; ++iter) {
        const double r_prev = r_c;
        const double p_prev = p_c;
        r_c = line_min([&](double r) { return value_at(r, p_c); },
                       std::max(r_c - r_w, 1e-9), r_c + r_w);
        p_c = line_min([&](double phi) { return value_at(r_c, phi); }, p_c - p_w,
                       p_c + p_w);
        const double m_r = r_c - r_prev;
        const double m_p = p_c - p_prev;
        // Extra pass along the round's combined motion while the center is
        // still traveling. Narrow residual valleys run diagonally through
        // (r, phi) and axis-parallel steps alone crawl there; the motion
        // direction points down the valley. Skipped once the coordinate
        // steps stop moving, so the coarser tolerance here cannot disturb a
        // converged center. The jump is capped at a few cells per round so
        // the search cannot vault a saddle into a neighboring basin.
        if (std::fabs(m_r) > 0.2 * r_w || std::fabs(m_p) > 0.2 * p_w) {
          double t = line_min(
              [&](double s) {
                return value_at(std::max(r_c + s * m_r, 1e-9), p_c + s * m_p);
              },
              -2.0, 8.0);
          if (std::fabs(t * m_r) > 3.0 * dr) t *= 3.0 * dr / std::fabs(t * m_r);
          if (std::fabs(t * m_p) > 3.0 * dphi) t *= 3.0 * dphi / std::fabs(t * m_p);
          r_c = std::max(r_c + t * m_r, 1e-9);
          p_c += t * m_p;
          // A long jump needs the next cross-valley search re-widened.
          r_w = std::min(std::max(r_w, std::fabs(t * m_r)), dr);
          p_w = std::min(std::max(p_w, std::fabs(t * m_p)), dphi);
        }
        // Zero motion on a wide bracket only means the line searches are
        // tolerance-limited there; converged is zero motion at floor widths.
        const double moved = std::fabs(r_c - r_prev) + std::fabs(p_c - p_prev);
        if (moved == 0.0 && r_w <= 2e-13 * (1.0 + r_c) && p_w <= 2e-13) break;
        // Widths follow the coordinate-step motion and otherwise decay
        // gently, so a coordinate that pauses while the other catches up is
        // not locked out.
        r_w = std::clamp(std::max(4.0 * std::fabs(m_r), 0.55 * r_w),
                         1e-13 * (1.0 + r_c), dr);
        p_w = std::clamp(std::max(4.0 * std::fabs(m_p), 0.55 * p_w), 1e-13, dphi);
      }
      if (value_at(r_c, p_c) <= stall_bar) break;
    }
    // On the exact axis columns a frozen-ray polish is often the sharper
    // tool; keep whichever end point evaluates lower.
    if (std::fabs(sin_phi[j]) < 1e-15) {
      const double r_axis = polish_ray(rs[i], j * dphi, grid.refine_iters);
      if (value_at(r_axis, j * dphi) < value_at(r_c, p_c)) {
        r_c = r_axis;
        p_c = j * dphi;
      }
    }
    const Vec2 z{r_c * std::cos(p_c), r_c * std::sin(p_c)};
    return GridFinding{z, residual(alg, c, z), i, j};
  };

  std::vector<GridFinding> findings;
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < np; ++j) {
      const double v = at(i, j);
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ni = i + di;
          if (ni < 0 || ni >= nr) continue;  // r window edges; phi wraps
          if (at(ni, j + dj) < v) {
            is_min = false;
            break;
          }
        }
      }
      // Cells on the axis columns count with a 1-D test as well: cusped
      // functionals can tilt both angular neighbours below an axis cell that
      // still heads a genuine real-axis basin.
      if (!is_min && std::fabs(sin_phi[j]) < 1e-15) {
        is_min = (i == 0 || at(i - 1, j) >= v) && (i == nr - 1 || at(i + 1, j) >= v);
      }
      if (!is_min) continue;
      findings.push_back(refine_cell(i, j));
    }
  }

  std::sort(findings.begin(), findings.end(),
            [](const GridFinding& a, const GridFinding& b) {
              if (a.residual != b.residual) return a.residual < b.residual;
              if (a.r_index != b.r_index) return a.r_index < b.r_index;
              return a.phi_index < b.phi_index;
            });
  return findings;
}

bool LawReport::all_pass() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const LawCheck& lc) { return lc.passes == lc.trials; });
}

LawReport check_laws(const Algebra& alg, int trials, std::uint64_t seed,
                     double tolerance) {
  if (trials < 1) throw InvalidInputError("check_laws: trials must be >= 1");
  LawReport report{alg.spec(), trials, seed, tolerance, {}};
  std::mt19937_64 rng(seed);

  const auto run =
      [&](const char* name, const std::function<double(std::mt19937_64&)>& one_trial) {
        LawCheck check{name, trials, 0, 0.0};
        for (int t = 0; t < trials; ++t) {
          const double dev = one_trial(rng);
          check.worst_deviation = std::max(check.worst_deviation, dev);
          if (dev <= tolerance) ++check.passes;
        }
        report.laws.push_back(std::move(check));
      };

  run("commutativity", [&](std::mt19937_64& r) {
    const Vec2 a = random_vec(r);
    const Vec2 b = random_vec(r);
    return deviation(alg.mul(a, b), alg.mul(b, a));
  });
  run("associativity", [&](std::mt19937_64& r) {
    const Vec2 a = random_vec(r);
    const Vec2 b = random_vec(r);
    const Vec2 c = random_vec(r);
    return deviation(alg.mul(alg.mul(a, b), c), alg.mul(a, alg.mul(b, c)));
  });
  run("scaling_nonneg", [&](std::mt19937_64& r) {
    const Vec2 a = random_vec(r);
    const Vec2 b = random_vec(r);
    const double lambda = uniform(r, 0.0, 10.0);
    const double mu = uniform(r, 0.0, 10.0);
    return deviation(alg.mul(scale(lambda, a), scale(mu, b)),
                     scale(lambda * mu, alg.mul(a, b)));
  });
  run("scaling_real", [&](std::mt19937_64& r) {
    const Vec2 a = random_vec(r);
    const Vec2 b = random_vec(r);
    const double lambda = uniform(r, -10.0, 10.0);
    const double mu = uniform(r, -10.0, 10.0);
    return deviation(alg.mul(scale(lambda, a), scale(mu, b)),
                     scale(lambda * mu, alg.mul(a, b)));
  });
  run("zero_product", [&](std::mt19937_64& r) {
    const Vec2 a = random_vec(r);
    double dev = euclid_norm(alg.mul(a, kOrigin)) + euclid_norm(alg.mul(kOrigin, a));
    if (alg.is_phs()) {
      // Zero-divisor freeness: a nonzero product of nonzero factors.
      const Vec2 b = random_vec(r);
      if (alg.mul(a, b) == kOrigin) dev = 1.0;
    }
    return dev;
  });

  switch (alg.kind()) {
    case Algebra::Kind::Circular:
      run("circle_closure", [&](std::mt19937_64& r) {
        const Vec2 a = random_vec(r);
        const double theta = uniform(r, 0.0, kTwoPi);
        const Vec2 b{std::cos(theta), std::sin(theta)};
        const double r1 = euclid_norm(a);
        return std::fabs(euclid_norm(circ_mul(a, b)) - r1) / (1.0 + r1);
      });
      break;
    case Algebra::Kind::Hyperbolic:
      run("half_circle_closure", [&](std::mt19937_64& r) {
        const double r1 = uniform(r, 0.1, 10.0);
        const double t1 = uniform(r, -3.0, 3.0);
        const double t2 = uniform(r, -3.0, 3.0);
        const Vec2 a{r1 * std::cosh(t1), r1 * std::sinh(t1)};
        const Vec2 b{std::cosh(t2), std::sinh(t2)};
        const Vec2 w = hyp_mul(a, b);
        if (!(w.x > 0.0)) return 1.0;
        // Scaled by the squared magnitude: x^2 - y^2 cancels catastrophically
        // for w far along the hyperbola, so the raw difference grows with w
        // even at an exact point.
        return std::fabs(w.x * w.x - w.y * w.y - r1 * r1) /
               (1.0 + w.x * w.x + w.y * w.y);
      });
      break;
    case Algebra::Kind::Phs:
      run("unit_circle_closure", [&](std::mt19937_64& r) {
        const PhsFunctional& f = alg.functional();
        const Vec2 a = random_vec(r);
        const Vec2 b = random_vec(r);
        const Vec2 u = scale(1.0 / f.eval(a), a);
        const Vec2 v = scale(1.0 / f.eval(b), b);
        return std::fabs(f.eval(phs_mul(f, u, v)) - 1.0);
      });
      break;
  }
  return report;
}

}  // namespace vecquad
