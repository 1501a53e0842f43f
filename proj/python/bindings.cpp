#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "psystem/analysis.hpp"
#include "psystem/entropy.hpp"
#include "psystem/error.hpp"
#include "psystem/numerics.hpp"
#include "psystem/shock.hpp"
#include "psystem/simulator.hpp"

namespace py = pybind11;
using namespace psystem;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shock construction and entropy checks for the 1-D elasticity p-system";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<UsageError>(m, "UsageError", base);
  auto numerical = py::register_exception<NumericalError>(m, "NumericalError", base);
  py::register_exception<NoSolutionError>(m, "NoSolutionError", numerical);
  py::register_exception<SimulationError>(m, "SimulationError", numerical);

  py::enum_<ModelKind>(m, "ModelKind")
      .value("StVenantKirchhoff", ModelKind::StVenantKirchhoff)
      .value("KirchhoffModified", ModelKind::KirchhoffModified)
      .value("Ogden", ModelKind::Ogden)
      .value("BlatzKoOgden", ModelKind::BlatzKoOgden)
      .value("Linear", ModelKind::Linear);

  py::class_<ModelSpec>(m, "ModelSpec")
      .def(py::init<ModelKind, double, double, double, std::optional<double>>(), py::arg("kind"),
           py::arg("rho0") = 1.0, py::arg("mu") = 1.0, py::arg("lambda_") = 1.0,
           py::arg("f") = py::none())
      .def_readwrite("kind", &ModelSpec::kind)
      .def_readwrite("rho0", &ModelSpec::rho0)
      .def_readwrite("mu", &ModelSpec::mu)
      .def_readwrite("lambda_", &ModelSpec::lambda)
      .def_readwrite("f", &ModelSpec::f)
      .def_property_readonly("alpha", &ModelSpec::alpha)
      .def_property_readonly("beta", &ModelSpec::beta)
      .def("validate", &ModelSpec::validate)
      .def_static("from_beta", &ModelSpec::from_beta, py::arg("kind"), py::arg("beta"),
                  py::arg("f") = py::none())
      .def("__repr__", [](const ModelSpec& s) {
        return "ModelSpec(" + std::string(to_string(s.kind)) + ", rho0=" + std::to_string(s.rho0) +
               ", mu=" + std::to_string(s.mu) + ", lambda=" + std::to_string(s.lambda) + ")";
      });

  m.def("stress", [](const ModelSpec& model, double gamma) {
    const auto e = stress(model, gamma);
    return py::make_tuple(e.p, e.dp, e.d2p);
  }, py::arg("model"), py::arg("gamma"), "(P, P', P'') at strain gamma");
  m.def("stress_antiderivative", &stress_antiderivative, py::arg("model"), py::arg("gamma"));
  m.def("q_value", &q_value, py::arg("model"), py::arg("gamma"));

  m.def("find_root", [](const std::function<double(double)>& f, double lo, double hi) {
    return numerics::find_root(f, {lo, hi}).root;
  }, py::arg("f"), py::arg("lo"), py::arg("hi"));
  m.def("lambert_w0", &numerics::lambert_w0, py::arg("x"));

  m.def("stvk_hyperbolic_threshold", &stvk_hyperbolic_threshold);
  m.def("kirchhoff_alpha_bounds", &kirchhoff_alpha_bounds);
  m.def("kirchhoff_s_alpha", &kirchhoff_s_alpha, py::arg("alpha"));
  m.def("blatzko_s_beta", &blatzko_s_beta, py::arg("beta"));
  m.def("blatzko_f_threshold", &blatzko_f_threshold, py::arg("beta"));
  m.def("blatzko_s0", &blatzko_s0, py::arg("beta"));
  m.def("scan_regions", [](const ModelSpec& model, double lo, double hi) {
    const auto r = scan_regions(model, lo, hi);
    auto pairs = [](const std::vector<Interval>& xs) {
      py::list out;
      for (const auto& i : xs) out.append(py::make_tuple(i.lo, i.hi));
      return out;
    };
    py::dict thresholds;
    for (const auto& t : r.notes) thresholds[py::str(t.name)] = t.value;
    py::dict d;
    d["hyperbolic"] = pairs(r.hyperbolic_intervals);
    d["gnl"] = pairs(r.gnl_intervals);
    d["thresholds"] = thresholds;
    return d;
  }, py::arg("model"), py::arg("gamma_lo") = kDefaultScanLo, py::arg("gamma_hi") = kDefaultScanHi);

  py::class_<ShockSolution>(m, "ShockSolution")
      .def_readonly("model", &ShockSolution::model)
      .def_readonly("v0", &ShockSolution::v0)
      .def_readonly("gamma_l", &ShockSolution::gamma_l)
      .def_readonly("sigma", &ShockSolution::sigma)
      .def_readonly("rh_residual", &ShockSolution::rh_residual)
      .def_readonly("trivial", &ShockSolution::trivial)
      .def_readonly("warnings", &ShockSolution::warnings);
  m.def("solve_rankine_hugoniot", &solve_rankine_hugoniot, py::arg("model"), py::arg("v0"));
  m.def("evaluate", [](const ShockSolution& s, double x, double t) {
    const auto u = evaluate(s, x, t);
    return py::make_tuple(u.v, u.gamma);
  }, py::arg("solution"), py::arg("x"), py::arg("t"));

  py::class_<EntropyVerdict>(m, "EntropyVerdict")
      .def_readonly("gamma_l", &EntropyVerdict::gamma_l)
      .def_readonly("margin", &EntropyVerdict::margin)
      .def_readonly("holds", &EntropyVerdict::holds)
      .def_readonly("s_e", &EntropyVerdict::s_e);
  m.def("standard_pair", &standard_pair, py::arg("model"), py::arg("v"), py::arg("gamma"));
  m.def("jump_excess", &jump_excess, py::arg("model"), py::arg("gamma_l"));
  m.def("check_condition", &check_condition, py::arg("model"), py::arg("gamma_l"));
  m.def("kirchhoff_entropy_boundary", &kirchhoff_entropy_boundary, py::arg("alpha"));
  m.def("near_zero_certificate", &near_zero_certificate, py::arg("model"));

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("model", &SimConfig::model)
      .def_readwrite("v0", &SimConfig::v0)
      .def_readwrite("domain_length", &SimConfig::domain_length)
      .def_readwrite("cells", &SimConfig::cells)
      .def_readwrite("cfl", &SimConfig::cfl)
      .def_readwrite("t_end", &SimConfig::t_end);
  py::class_<SimField>(m, "SimField")
      .def_readonly("x", &SimField::x)
      .def_readonly("V", &SimField::v)
      .def_readonly("Gamma", &SimField::gamma)
      .def_readonly("t", &SimField::t);
  m.def("simulate", &simulate, py::arg("config"), py::call_guard<py::gil_scoped_release>());
  m.def("extract_shock", [](const SimField& field, const ShockSolution& hint) {
    const auto e = extract_shock(field, hint);
    return py::make_tuple(e.sigma, e.gamma_left);
  }, py::arg("field"), py::arg("hint"));
}
