// Python bindings for the main operations: functional evaluation, the three
// vector products, the quadratic solvers, and the brute-force oracle.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vecquad/errors.hpp"
#include "vecquad/oracle.hpp"

namespace py = pybind11;
using namespace vecquad;

namespace {

std::string repr_vec2(const Vec2& z) {
  std::ostringstream os;
  os.precision(17);
  os << "Vec2(" << z.x << ", " << z.y << ")";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_vecquad, m) {
  m.doc() =
      "Two-dimensional vector algebras (circular, functional-generalized, "
      "hyperbolic) and solvers for quadratic vector polynomials.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedRegimeError>(m, "UnsupportedRegimeError",
                                                 PyExc_ValueError);
  py::register_exception<ConditionNotMetError>(m, "ConditionNotMetError",
                                               PyExc_ValueError);

  py::class_<Vec2>(m, "Vec2")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readwrite("x", &Vec2::x)
      .def_readwrite("y", &Vec2::y)
      .def("__repr__", &repr_vec2)
      .def("__eq__", [](const Vec2& a, const Vec2& b) { return a == b; });

  py::class_<PhsFunctional>(m, "PhsFunctional")
      .def_static("parse", &PhsFunctional::parse, py::arg("spec"))
      .def_static("euclidean", &PhsFunctional::euclidean)
      .def_static("lp", &PhsFunctional::lp, py::arg("exponent"))
      .def_static("weighted_lp", &PhsFunctional::weighted_lp, py::arg("exponent"),
                  py::arg("wx"), py::arg("wy"))
      .def_static("max_norm", &PhsFunctional::max_norm)
      .def("spec", &PhsFunctional::spec)
      .def("eval", &PhsFunctional::eval, py::arg("z"))
      .def("__call__", &PhsFunctional::eval, py::arg("z"))
      .def("__repr__",
           [](const PhsFunctional& f) { return "PhsFunctional('" + f.spec() + "')"; });

  m.def("n_of_phi", &n_of_phi, py::arg("functional"), py::arg("phi"));
  m.def("q_star", &q_star, py::arg("functional"), py::arg("phi"));
  m.def("q_of_z", &q_of_z, py::arg("functional"), py::arg("z"));

  m.def("circ_mul", &circ_mul, py::arg("a"), py::arg("b"));
  m.def("hyp_mul", &hyp_mul, py::arg("a"), py::arg("b"));
  m.def("phs_mul", &phs_mul, py::arg("functional"), py::arg("a"), py::arg("b"));

  py::class_<Algebra>(m, "Algebra")
      .def_static("parse", &Algebra::parse, py::arg("spec"))
      .def("spec", &Algebra::spec)
      .def("mul", &Algebra::mul, py::arg("a"), py::arg("b"))
      .def("square", &Algebra::square, py::arg("z"))
      .def(
          "eval_poly",
          [](const Algebra& alg, double p, double q, Vec2 z) {
            return alg.eval_poly({p, q}, z);
          },
          py::arg("p"), py::arg("q"), py::arg("z"))
      .def("__repr__", [](const Algebra& a) { return "Algebra('" + a.spec() + "')"; });

  py::enum_<RootKind>(m, "RootKind")
      .value("REAL_AXIS", RootKind::RealAxis)
      .value("ACCOMPANIED", RootKind::Accompanied);

  py::class_<Root>(m, "Root")
      .def_readonly("z", &Root::z)
      .def_readonly("kind", &Root::kind)
      .def_readonly("residual", &Root::residual)
      .def_readonly("hyp_domain_ok", &Root::hyp_domain_ok)
      .def_readonly("locus_ok", &Root::locus_ok)
      .def("__repr__", [](const Root& r) {
        return "Root(" + repr_vec2(r.z) + ", " +
               (r.kind == RootKind::RealAxis ? "real-axis" : "accompanied") + ")";
      });

  py::class_<PolarSolution>(m, "PolarSolution")
      .def_readonly("r", &PolarSolution::r)
      .def_readonly("phi", &PolarSolution::phi);

  py::class_<RootReport>(m, "RootReport")
      .def_property_readonly("algebra",
                             [](const RootReport& r) { return r.algebra.spec(); })
      .def_property_readonly("p", [](const RootReport& r) { return r.coeffs.p; })
      .def_property_readonly("q", [](const RootReport& r) { return r.coeffs.q; })
      .def_readonly("discriminant", &RootReport::discriminant)
      .def_readonly("roots", &RootReport::roots)
      .def_readonly("polar", &RootReport::polar)
      .def_readonly("no_solution_certified", &RootReport::no_solution_certified);

  py::class_<SolveOptions>(m, "SolveOptions")
      .def(py::init<>())
      .def_readwrite("scan_intervals", &SolveOptions::scan_intervals)
      .def_readwrite("phi_tol", &SolveOptions::phi_tol)
      .def_readwrite("residual_tol", &SolveOptions::residual_tol)
      .def_readwrite("exclusion_radius", &SolveOptions::exclusion_radius)
      .def_readwrite("accompanied", &SolveOptions::accompanied);

  m.def(
      "solve_real", [](double p, double q) { return solve_real({p, q}); }, py::arg("p"),
      py::arg("q"));
  m.def(
      "solve_circular", [](double p, double q) { return solve_circular({p, q}); },
      py::arg("p"), py::arg("q"));
  m.def(
      "circular_polar", [](double p, double q) { return circular_polar({p, q}); },
      py::arg("p"), py::arg("q"));
  m.def(
      "solve_hyperbolic", [](double p, double q) { return solve_hyperbolic({p, q}); },
      py::arg("p"), py::arg("q"));
  m.def(
      "solve_phs",
      [](const PhsFunctional& f, double p, double q, const SolveOptions& opts) {
        return solve_phs(f, {p, q}, opts);
      },
      py::arg("functional"), py::arg("p"), py::arg("q"),
      py::arg("options") = SolveOptions{});
  m.def(
      "find_phi_roots",
      [](const PhsFunctional& f, double p, double q, const SolveOptions& opts) {
        return find_phi_roots(f, {p, q}, opts);
      },
      py::arg("functional"), py::arg("p"), py::arg("q"),
      py::arg("options") = SolveOptions{});

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<>())
      .def_readwrite("r_min", &GridSpec::r_min)
      .def_readwrite("r_max", &GridSpec::r_max)
      .def_readwrite("r_steps", &GridSpec::r_steps)
      .def_readwrite("phi_steps", &GridSpec::phi_steps)
      .def_readwrite("refine_iters", &GridSpec::refine_iters)
      .def_static(
          "default_for", [](double p, double q) { return GridSpec::default_for({p, q}); },
          py::arg("p"), py::arg("q"));

  py::class_<GridFinding>(m, "GridFinding")
      .def_readonly("z", &GridFinding::z)
      .def_readonly("residual", &GridFinding::residual)
      .def_readonly("r_index", &GridFinding::r_index)
      .def_readonly("phi_index", &GridFinding::phi_index);

  m.def(
      "residual",
      [](const Algebra& alg, double p, double q, Vec2 z) {
        return residual(alg, {p, q}, z);
      },
      py::arg("algebra"), py::arg("p"), py::arg("q"), py::arg("z"));
  m.def(
      "grid_search",
      [](const Algebra& alg, double p, double q, const GridSpec& grid) {
        return grid_search(alg, {p, q}, grid);
      },
      py::arg("algebra"), py::arg("p"), py::arg("q"), py::arg("grid"));

  py::class_<LawCheck>(m, "LawCheck")
      .def_readonly("law", &LawCheck::law)
      .def_readonly("trials", &LawCheck::trials)
      .def_readonly("passes", &LawCheck::passes)
      .def_readonly("worst_deviation", &LawCheck::worst_deviation);

  py::class_<LawReport>(m, "LawReport")
      .def_readonly("algebra_spec", &LawReport::algebra_spec)
      .def_readonly("trials", &LawReport::trials)
      .def_readonly("seed", &LawReport::seed)
      .def_readonly("tolerance", &LawReport::tolerance)
      .def_readonly("laws", &LawReport::laws)
      .def("all_pass", &LawReport::all_pass);

  m.def(
      "check_laws",
      [](const Algebra& alg, int trials, std::uint64_t seed, double tolerance) {
        return check_laws(alg, trials, seed, tolerance);
      },
      py::arg("algebra"), py::arg("trials"), py::arg("seed"),
      py::arg("tolerance") = 1e-12);

  m.attr("__version__") = "0.1.0";
}
