#include "vecquad/solvers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "vecquad/errors.hpp"

namespace vecquad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Tangential zeros of the angle equation are accepted when refinement drives
// |g| at least this low; the Cartesian residual check still has the last word.
constexpr double kTangentialEps = 1e-12;

double root_residual(const Algebra& alg, QuadraticCoeffs c, Vec2 z) {
  return euclid_norm(alg.eval_poly(c, z));
}

int kind_rank(RootKind k) { return k == RootKind::RealAxis ? 0 : 1; }

// Canonical report order plus the dedup pass: sort by polar angle, then kind,
// then components; merge roots closer than kRootDedupDistance keeping the
// smaller residual (ties keep the real-axis labelling).
void finalize_roots(RootReport& report) {
  std::sort(report.roots.begin(), report.roots.end(), [](const Root& a, const Root& b) {
    const double pa = polar_angle(a.z);
    const double pb = polar_angle(b.z);
    if (pa != pb) return pa < pb;
    if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
    if (a.z.x != b.z.x) return a.z.x < b.z.x;
    return a.z.y < b.z.y;
  });
  std::vector<Root> kept;
  kept.reserve(report.roots.size());
  for (const Root& candidate : report.roots) {
    Root* close = nullptr;
    for (Root& existing : kept) {
      if (distance(existing.z, candidate.z) < kRootDedupDistance) {
        close = &existing;
        break;
      }
    }
    if (close == nullptr) {
      kept.push_back(candidate);
    } else if (candidate.residual < close->residual) {
      *close = candidate;
    }
  }
  report.roots = std::move(kept);
  std::sort(report.polar.begin(), report.polar.end(),
            [](const PolarSolution& a, const PolarSolution& b) { return a.phi < b.phi; });
}

template <class Fn>
double bisect_to(Fn&& g, double lo, double hi, double g_lo, double tol) {
  // g(lo) and g(hi) have opposite signs on entry.
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

template <class Fn>
double golden_min(Fn&& h, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double hc = h(c);
  double hd = h(d);
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    if (hc < hd) {
      hi = d;
      d = c;
      hd = hc;
      c = hi - kInvPhi * (hi - lo);
      hc = h(c);
    } else {
      lo = c;
      c = d;
      hc = hd;
      d = lo + kInvPhi * (hi - lo);
      hd = h(d);
    }
  }
  return 0.5 * (lo + hi);
}

Root make_root(const Algebra& alg, QuadraticCoeffs c, Vec2 z, RootKind kind) {
  return Root{z, kind, root_residual(alg, c, z), std::nullopt, std::nullopt};
}

void append_real_axis_roots(RootReport& report, const Algebra& alg, QuadraticCoeffs c) {
  const double disc = c.discriminant();
  if (disc < 0.0) return;
  const double s = std::sqrt(disc);
  report.roots.push_back(make_root(alg, c, {-c.p / 2.0 - s, 0.0}, RootKind::RealAxis));
  report.roots.push_back(make_root(alg, c, {-c.p / 2.0 + s, 0.0}, RootKind::RealAxis));
}

}  // namespace

RootReport solve_real(QuadraticCoeffs c) {
  // The scalar problem embeds on the x-axis, where every algebra evaluates the
  // polynomial as (x^2 + p x + q, 0); the circular algebra stands in for the
  // residual computation.
  RootReport report{Algebra::circular(), c, c.discriminant(), {}, {}, false};
  if (report.discriminant < 0.0) {
    report.no_solution_certified = true;
    return report;
  }
  append_real_axis_roots(report, report.algebra, c);
  finalize_roots(report);
  return report;
}

RootReport solve_circular(QuadraticCoeffs c) {
  RootReport report{Algebra::circular(), c, c.discriminant(), {}, {}, false};
  if (-report.discriminant > 0.0) {
    const double s = std::sqrt(-report.discriminant);
    report.roots.push_back(
        make_root(report.algebra, c, {-c.p / 2.0, s}, RootKind::Accompanied));
    report.roots.push_back(
        make_root(report.algebra, c, {-c.p / 2.0, -s}, RootKind::Accompanied));
    report.polar = circular_polar(c);
  } else {
    append_real_axis_roots(report, report.algebra, c);
  }
  finalize_roots(report);
  return report;
}

std::vector<PolarSolution> circular_polar(QuadraticCoeffs c) {
  if (!(c.q - c.p * c.p / 4.0 > 0.0) || !(c.q > 0.0)) {
    throw ConditionNotMetError("circular_polar: requires q - p^2/4 > 0 and q > 0");
  }
  const double r = std::sqrt(c.q);
  const double cos_phi = -c.p / (2.0 * r);
  const double sin_phi = std::sqrt(1.0 - c.p * c.p / (4.0 * c.q));
  const double phi_up = std::atan2(sin_phi, cos_phi);        // in (0, pi)
  const double phi_down = kTwoPi - phi_up;                   // in (pi, 2 pi)
  return {{r, phi_up}, {r, phi_down}};
}

std::vector<double> find_phi_roots(const PhsFunctional& f, QuadraticCoeffs c,
                                   const SolveOptions& opts) {
  if (!(c.q > 0.0)) {
    throw UnsupportedRegimeError("find_phi_roots: requires q > 0");
  }
  if (opts.scan_intervals < 16 || !(opts.phi_tol > 0.0) ||
      !(opts.exclusion_radius > 0.0) || opts.exclusion_radius >= 1.0) {
    throw InvalidInputError("find_phi_roots: bad scan options");
  }
  const double rhs = c.p * c.p / (4.0 * c.q);
  const auto g = [&](double phi) {
    const double cs = std::cos(phi);
    return q_star(f, phi) * cs * cs - rhs;
  };

  std::vector<double> roots;
  const double eps = opts.exclusion_radius;
  const std::array<std::pair<double, double>, 2> segments{
      {{eps, std::numbers::pi - eps}, {std::numbers::pi + eps, kTwoPi - eps}}};
  const int per_segment = std::max(8, opts.scan_intervals / 2);

  std::vector<double> xs(per_segment + 1);
  std::vector<double> gs(per_segment + 1);
  for (const auto& [lo, hi] : segments) {
    const double h = (hi - lo) / per_segment;
    for (int i = 0; i <= per_segment; ++i) {
      xs[i] = i == per_segment ? hi : lo + i * h;
      gs[i] = g(xs[i]);
    }
    for (int i = 0; i <= per_segment; ++i) {
      if (gs[i] == 0.0) roots.push_back(xs[i]);
    }
    for (int i = 0; i < per_segment; ++i) {
      if (gs[i] != 0.0 && gs[i + 1] != 0.0 && (gs[i] < 0.0) != (gs[i + 1] < 0.0)) {
        roots.push_back(bisect_to(g, xs[i], xs[i + 1], gs[i], opts.phi_tol));
      }
    }
    // Extrema that touch zero without a sign change (p = 0 always lands here)
    // or dip across it inside a single subinterval.
    for (int i = 1; i < per_segment; ++i) {
      const bool grid_min = gs[i] > 0.0 && gs[i - 1] >= gs[i] && gs[i + 1] >= gs[i] &&
                            gs[i - 1] > 0.0 && gs[i + 1] > 0.0;
      const bool grid_max = gs[i] < 0.0 && gs[i - 1] <= gs[i] && gs[i + 1] <= gs[i] &&
                            gs[i - 1] < 0.0 && gs[i + 1] < 0.0;
      if (!grid_min && !grid_max) continue;
      const double sign = grid_min ? 1.0 : -1.0;
      const double phi_ext =
          golden_min([&](double t) { return sign * g(t); }, xs[i - 1], xs[i + 1],
                     opts.phi_tol);
      const double g_ext = g(phi_ext);
      if (std::fabs(g_ext) <= kTangentialEps) {
        roots.push_back(phi_ext);
      } else if (sign * g_ext < 0.0) {
        // Two crossings hidden between scan points.
        roots.push_back(bisect_to(g, xs[i - 1], phi_ext, gs[i - 1], opts.phi_tol));
        roots.push_back(bisect_to(g, phi_ext, xs[i + 1], g_ext, opts.phi_tol));
      }
    }
  }

  std::sort(roots.begin(), roots.end());
  // Adjacent scan features can resolve to the same angle; keep one of each.
  const double merge_tol = std::max(8.0 * opts.phi_tol, 1e-13);
  std::vector<double> unique;
  for (double phi : roots) {
    if (unique.empty() || phi - unique.back() > merge_tol) unique.push_back(phi);
  }
  return unique;
}

RootReport solve_phs(const PhsFunctional& f, QuadraticCoeffs c, const SolveOptions& opts) {
  RootReport report{Algebra::phs(f), c, c.discriminant(), {}, {}, false};
  if (opts.accompanied && !(c.q > 0.0)) {
    throw UnsupportedRegimeError(
        "solve_phs: the accompanied-root search requires q > 0; disable it to "
        "solve for real-axis roots only");
  }
  // Real-axis branch: the catalog keeps Q = 1 on the x-axis, so the scalar
  // roots solve the generalized equation for every functional.
  append_real_axis_roots(report, report.algebra, c);

  if (opts.accompanied) {
    for (double phi : find_phi_roots(f, c, opts)) {
      const double cos_phi = std::cos(phi);
      const double sin_phi = std::sin(phi);
      // The angle equation arises from squaring r Q*(phi) cos phi = -p/2, so
      // only angles with cos phi opposing the sign of p can survive.
      if (c.p > 0.0 && !(cos_phi < 0.0)) continue;
      if (c.p < 0.0 && !(cos_phi > 0.0)) continue;
      const double r = std::sqrt(c.q * n_of_phi(f, 2.0 * phi)) / n_of_phi(f, phi);
      if (std::fabs(r * q_star(f, phi) * cos_phi + c.p / 2.0) >
          1e-9 * (1.0 + std::fabs(c.p))) {
        continue;
      }
      const Vec2 z{r * cos_phi, r * sin_phi};
      const double res = root_residual(report.algebra, c, z);
      if (res > opts.residual_tol) continue;
      Root root{z, RootKind::Accompanied, res, std::nullopt, std::nullopt};
      if (c.p != 0.0) {
        const double rad = c.q / c.p;
        const double dev =
            std::fabs((z.x + rad) * (z.x + rad) + z.y * z.y - rad * rad);
        root.locus_ok = dev <= kLocusRelTol * rad * rad;
      }
      report.roots.push_back(root);
      report.polar.push_back({r, phi});
    }
  }
  finalize_roots(report);
  return report;
}

RootReport solve_hyperbolic(QuadraticCoeffs c) {
  RootReport report{Algebra::hyperbolic(), c, c.discriminant(), {}, {}, false};
  if (report.discriminant < 0.0) {
    report.no_solution_certified = true;
    return report;
  }
  const double s = std::sqrt(report.discriminant);
  const auto push = [&](Vec2 z, RootKind kind) {
    Root root = make_root(report.algebra, c, z, kind);
    root.hyp_domain_ok = std::fabs(z.y) < z.x;
    report.roots.push_back(root);
  };
  push({-c.p / 2.0 - s, 0.0}, RootKind::RealAxis);
  push({-c.p / 2.0 + s, 0.0}, RootKind::RealAxis);
  push({-c.p / 2.0, -s}, RootKind::Accompanied);
  push({-c.p / 2.0, s}, RootKind::Accompanied);
  finalize_roots(report);
  return report;
}

}  // namespace vecquad
