#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pulsent/entanglement.hpp"
#include "pulsent/error.hpp"
#include "pulsent/evolution.hpp"
#include "pulsent/pulse.hpp"
#include "pulsent/scenarios.hpp"
#include "pulsent/validation.hpp"

namespace py = pybind11;
using namespace pulsent;

namespace {

std::vector<std::vector<Complex>> to_rows(const ComplexMatrix& m) {
  std::vector<std::vector<Complex>> rows(m.rows(), std::vector<Complex>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return rows;
}

CoefficientMode mode_arg(const std::string& mode) { return parse_mode(mode); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entanglement dynamics of a pulse-driven qubit pair";

  py::register_exception<Error>(m, "PulsentError", PyExc_ValueError);

  py::enum_<PulseShape>(m, "PulseShape")
      .value("NONE", PulseShape::None)
      .value("RECTANGULAR", PulseShape::Rectangular)
      .value("EXPONENTIAL", PulseShape::Exponential);

  py::class_<PulseSpec>(m, "PulseSpec")
      .def_static("none", &PulseSpec::none)
      .def_static("rectangular", &PulseSpec::rectangular, py::arg("omega0"), py::arg("delta"),
                  py::arg("duration"))
      .def_static("exponential", &PulseSpec::exponential, py::arg("omega0"), py::arg("gamma"))
      .def_readonly("shape", &PulseSpec::shape)
      .def_readonly("omega0", &PulseSpec::omega0)
      .def_readonly("delta", &PulseSpec::delta)
      .def_readonly("duration", &PulseSpec::duration)
      .def_readonly("gamma", &PulseSpec::gamma)
      .def("__repr__", [](const PulseSpec& p) {
        return "PulseSpec(" + std::string(to_string(p.shape)) + ", omega0=" +
               format_number(p.omega0) + ", delta=" + format_number(p.delta) + ")";
      });

  m.def("envelope", &envelope, py::arg("pulse"), py::arg("t"));

  m.def(
      "coefficients",
      [](const PulseSpec& p, double t, const std::string& mode) {
        return coefficients(p, t, mode_arg(mode)).rows;
      },
      py::arg("pulse"), py::arg("t"), py::arg("mode") = "unitary",
      "Heisenberg map rows (A, B, D) of one qubit at time t.");

  m.def(
      "unitary_oracle", [](const PulseSpec& p, double t) { return to_rows(unitary_oracle(p, t)); },
      py::arg("pulse"), py::arg("t"));
  m.def(
      "rk4_oracle",
      [](const PulseSpec& p, double t_end, double step) {
        return to_rows(rk4_oracle(p, t_end, step));
      },
      py::arg("pulse"), py::arg("t_end"), py::arg("step") = 1e-3);

  m.def(
      "evolve_state",
      [](const std::array<double, 3>& c, const PulseSpec& a, const PulseSpec& b, double t,
         const std::string& mode) {
        const EvolvedState s =
            evolve_state(CorrelationState::diagonal(c[0], c[1], c[2]), a, b, t, mode_arg(mode));
        return py::make_tuple(s.state.tensor, s.imag_residue);
      },
      py::arg("correlations"), py::arg("pulse_a"), py::arg("pulse_b"), py::arg("t"),
      py::arg("mode") = "unitary",
      "Evolved correlation tensor and the dropped imaginary residue.");

  m.def(
      "negativity",
      [](const std::array<double, 3>& c) {
        const NegativityResult r =
            negativity(assemble_density(CorrelationState::diagonal(c[0], c[1], c[2])));
        return py::make_tuple(r.value, r.eigenvalues);
      },
      py::arg("correlations"), "Negativity and partial-transpose spectrum of a Bell-diagonal state.");

  m.def(
      "classify_werner", [](double x) { return std::string(to_string(classify_werner(x))); },
      py::arg("x"));

  m.def("preset_names", [] {
    std::vector<std::string> names;
    for (const auto& p : paper_figure_presets()) names.push_back(p.name);
    return names;
  });

  m.def(
      "run_preset",
      [](const std::string& name, const std::string& mode) {
        SweepConfig cfg = find_preset(name);
        cfg.mode = mode_arg(mode);
        const SweepResult r = run_sweep(cfg);
        std::vector<double> params;
        std::vector<std::vector<double>> values;
        std::vector<double> residue;
        for (const auto& row : r.rows) {
          params.push_back(row.param);
          values.push_back(row.negativity);
          residue.push_back(row.imag_residue);
        }
        py::dict out;
        out["header"] = csv_header(cfg);
        out["param"] = params;
        out["negativity"] = values;
        out["imag_residue"] = residue;
        out["csv"] = to_csv(r);
        return out;
      },
      py::arg("name"), py::arg("mode") = "unitary");

  m.def(
      "validate",
      [](std::uint64_t seed) {
        py::list out;
        for (const auto& c : run_validation({seed, false}))
          out.append(py::make_tuple(c.name, c.max_error, c.tolerance, c.passed()));
        return out;
      },
      py::arg("seed") = 1);
}
