#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hybridisc/diagnostics.hpp"
#include "hybridisc/errors.hpp"
#include "hybridisc/multidisc.hpp"
#include "hybridisc/solver.hpp"
#include "hybridisc/special.hpp"

namespace py = pybind11;
using namespace hybridisc;

PYBIND11_MODULE(_hybridisc, m) {
  m.doc() = "Potential flow past closely spaced discs.";

  auto base = py::register_exception<Error>(m, "HybridiscError");
  py::register_exception<InvalidGeometry>(m, "InvalidGeometry", base);
  py::register_exception<InvalidInput>(m, "InvalidInput", base);
  py::register_exception<DegenerateSystem>(m, "DegenerateSystem", base);
  py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", base);

  py::enum_<BoundaryKind>(m, "BoundaryKind")
      .value("Flow", BoundaryKind::Flow)
      .value("Electrostatic", BoundaryKind::Electrostatic);
  py::enum_<SchemeKind>(m, "SchemeKind")
      .value("Z", SchemeKind::ZScheme)
      .value("Zeta", SchemeKind::ZetaScheme)
      .value("Hybrid", SchemeKind::Hybrid);

  py::class_<Disc>(m, "Disc")
      .def(py::init<Complex, double>(), py::arg("center"), py::arg("radius"))
      .def_readonly("center", &Disc::center)
      .def_readonly("radius", &Disc::radius)
      .def("__repr__", [](const Disc& d) {
        return "Disc(" + py::repr(py::cast(d.center)).cast<std::string>() + ", " +
               std::to_string(d.radius) + ")";
      });

  py::class_<DiscConfiguration>(m, "DiscConfiguration")
      .def(py::init<std::vector<Disc>, Complex, BoundaryKind, std::size_t>(), py::arg("discs"),
           py::arg("far_field") = Complex{1.0, 0.0}, py::arg("kind") = BoundaryKind::Flow,
           py::arg("reference_index") = 0)
      .def_property_readonly("discs", &DiscConfiguration::discs)
      .def_property_readonly("far_field", &DiscConfiguration::far_field)
      .def_property_readonly("kind", &DiscConfiguration::kind)
      .def("__len__", &DiscConfiguration::size);

  m.def("two_disc_configuration", &two_disc_configuration, py::arg("d"), py::arg("s"),
        py::arg("far_field") = Complex{1.0, 0.0}, py::arg("kind") = BoundaryKind::Flow);
  m.def("nine_disc_array", &nine_disc_array, py::arg("spacing"), py::arg("gap"),
        py::arg("far_field") = Complex{1.0, 0.0}, py::arg("kind") = BoundaryKind::Flow);

  py::class_<AnnulusMap>(m, "AnnulusMap")
      .def(py::init<double, double>(), py::arg("d"), py::arg("s"))
      .def_property_readonly("d", &AnnulusMap::d)
      .def_property_readonly("s", &AnnulusMap::s)
      .def_property_readonly("rho", &AnnulusMap::rho)
      .def_property_readonly("A", &AnnulusMap::A)
      .def_property_readonly("T", &AnnulusMap::T)
      .def("to_physical", &AnnulusMap::to_physical, py::arg("zeta"))
      .def("to_annulus", &AnnulusMap::to_annulus, py::arg("z"));

  m.def("k_value", [](Complex z, double rho) { return k_value(z, rho); }, py::arg("zeta"),
        py::arg("rho"));
  m.def("k_sum", [](Complex z, double rho) { return k_sum(z, rho); }, py::arg("zeta"),
        py::arg("rho"));
  m.def("k_modular", [](Complex z, double rho) { return k_modular(z, rho); }, py::arg("zeta"),
        py::arg("rho"));

  py::class_<ExactSolution>(m, "ExactSolution")
      .def(py::init([](const AnnulusMap& map, Complex U0) { return ExactSolution(map, U0); }),
           py::arg("map"), py::arg("far_field"))
      .def("W", &ExactSolution::W, py::arg("zeta"))
      .def("w", &ExactSolution::w, py::arg("z"))
      .def("dw_dz", &ExactSolution::dw_dz, py::arg("z"))
      .def("log_strength", &ExactSolution::log_strength)
      .def("omega_coeffs", [](const ExactSolution& sol, int j_max) {
        const auto oc = omega_coeffs(sol, j_max);
        return py::make_tuple(oc.c, oc.d);
      }, py::arg("j_max"));

  py::class_<Expansion>(m, "Expansion")
      .def("__call__", &Expansion::eval, py::arg("z"))
      .def_property_readonly("scheme", &Expansion::scheme)
      .def("far_field_dipole", &Expansion::far_field_dipole)
      .def("dipole_quadrature",
           [](const Expansion& e, double R, int n) { return dipole_quadrature(e, R, n); },
           py::arg("R"), py::arg("n") = 1024);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("expansion", &SolveReport::expansion)
      .def_readonly("gammas", &SolveReport::gammas)
      .def_readonly("residual_norm", &SolveReport::residual_norm)
      .def_readonly("rank", &SolveReport::rank_estimate)
      .def_readonly("rows", &SolveReport::rows)
      .def_readonly("unknowns", &SolveReport::unknowns)
      .def_readonly("max_boundary_error", &SolveReport::max_boundary_error)
      .def_readonly("wall_time", &SolveReport::wall_time);

  m.def("solve_two_disc",
        [](const DiscConfiguration& c, SchemeKind scheme, int N, int per_circle) {
          py::gil_scoped_release release;
          return solve_two_disc(c, scheme, N, per_circle);
        },
        py::arg("config"), py::arg("scheme"), py::arg("N"), py::arg("per_circle") = 0);

  m.def("modes_for_accuracy",
        [](const DiscConfiguration& c, SchemeKind scheme, double target, int N_max, int step) {
          py::gil_scoped_release release;
          const auto r = modes_for_accuracy(c, scheme, target, N_max, step);
          return py::make_tuple(r.modes, r.trace);
        },
        py::arg("config"), py::arg("scheme"), py::arg("target"), py::arg("N_max") = 300,
        py::arg("step") = 5);

  py::class_<MultiDiscProblem>(m, "MultiDiscProblem")
      .def(py::init([](DiscConfiguration c, double threshold, int modes, int per_circle) {
             MultiDiscProblem p;
             p.config = std::move(c);
             p.threshold = threshold;
             p.modes = modes;
             p.points_per_circle = per_circle;
             return p;
           }),
           py::arg("config"), py::arg("threshold") = kDefaultCloseThreshold,
           py::arg("modes") = 5, py::arg("points_per_circle") = 0)
      .def_readwrite("modes", &MultiDiscProblem::modes)
      .def_readwrite("threshold", &MultiDiscProblem::threshold)
      .def_property_readonly("config", [](const MultiDiscProblem& p) { return p.config; });

  m.def("nine_disc_problem", &nine_disc_problem, py::arg("separation"), py::arg("modes"),
        py::arg("far_field") = Complex{1.0, 0.0}, py::arg("kind") = BoundaryKind::Flow);
  m.def("solve_multidisc",
        [](const MultiDiscProblem& p) {
          py::gil_scoped_release release;
          return solve_multidisc(p);
        },
        py::arg("problem"));
  m.def("multidisc_boundary_residual",
        [](const SolveReport& r, const DiscConfiguration& c, int n) {
          return multidisc_boundary_residual(r, c, n);
        },
        py::arg("report"), py::arg("config"), py::arg("n_test") = 1024);

  m.def("split_reconstruction_error",
        [](const AnnulusMap& map, double delta) {
          const auto split = hybrid_split_w21(map, CutoffSpec{delta, false}, 4096);
          return split_reconstruction_error(map, split);
        },
        py::arg("map"), py::arg("delta"));
}
