#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tunnelwell/exact.hpp"
#include "tunnelwell/semiclassical.hpp"
#include "tunnelwell/twolevel.hpp"

namespace py = pybind11;
using namespace tunnelwell;

namespace {

Potential make_custom(const std::string& expr_text,
                      const std::map<std::string, double>& bindings,
                      std::pair<double, double> window) {
    return Potential::custom(parse(expr_text), bindings, window);
}

} // namespace

PYBIND11_MODULE(_tunnelwell, m) {
    m.doc() = "Tunneling amplitudes for 1-D asymmetric double-well potentials";

    py::register_exception<NotDoubleWell>(m, "NotDoubleWellError");
    py::register_exception<ResonanceRegime>(m, "ResonanceRegimeError");
    py::register_exception<SyntaxError>(m, "ExprSyntaxError");

    py::class_<Potential>(m, "Potential")
        .def_static("quartic", &Potential::quartic, py::arg("v0"), py::arg("eta"))
        .def_static("parabolic", &Potential::parabolic, py::arg("v0"), py::arg("eta"))
        .def_static("custom", &make_custom, py::arg("expr"), py::arg("params"),
                    py::arg("window"))
        .def("__call__", &Potential::eval, py::arg("x"))
        .def("derivative", &Potential::derivative, py::arg("x"));

    py::class_<WellGeometry>(m, "WellGeometry")
        .def_readonly("a_L", &WellGeometry::a_L)
        .def_readonly("a_C", &WellGeometry::a_C)
        .def_readonly("a_R", &WellGeometry::a_R)
        .def_readonly("v_top", &WellGeometry::v_top)
        .def_readonly("omega_L", &WellGeometry::omega_L)
        .def_readonly("omega_R", &WellGeometry::omega_R)
        .def_readonly("eps_L", &WellGeometry::eps_L)
        .def_readonly("eps_R", &WellGeometry::eps_R)
        .def_readonly("cusp", &WellGeometry::cusp)
        .def_readonly("warnings", &WellGeometry::warnings);

    py::class_<TunnelingResult>(m, "TunnelingResult")
        .def_readonly("nu_L", &TunnelingResult::nu_L)
        .def_readonly("nu_R", &TunnelingResult::nu_R)
        .def_readonly("A", &TunnelingResult::A)
        .def_readonly("nu", &TunnelingResult::nu)
        .def_readonly("delta_eps", &TunnelingResult::delta_eps)
        .def_readonly("omega_rabi", &TunnelingResult::omega_rabi)
        .def_readonly("S_L", &TunnelingResult::S_L)
        .def_readonly("S_R", &TunnelingResult::S_R)
        .def_readonly("C_L", &TunnelingResult::C_L)
        .def_readonly("C_R", &TunnelingResult::C_R)
        .def_readonly("diagnostics", &TunnelingResult::diagnostics);

    py::class_<SpectrumResult>(m, "SpectrumResult")
        .def_readonly("e0", &SpectrumResult::e0)
        .def_readonly("e1", &SpectrumResult::e1)
        .def_readonly("splitting", &SpectrumResult::splitting)
        .def_readonly("converged", &SpectrumResult::converged);

    m.def("characterize", &characterize, py::arg("potential"));
    m.def("tunneling_amplitude", &tunneling_amplitude, py::arg("potential"));
    m.def("herring_amplitude", &herring_amplitude, py::arg("potential"));
    m.def("splitting_exact", &splitting_exact, py::arg("potential"),
          py::arg("n") = 200, py::arg("m") = 8.0);

    py::class_<TwoLevelParams>(m, "TwoLevelParams")
        .def(py::init([](double eps_l, double eps_r, double nu) {
                 return TwoLevelParams{eps_l, eps_r, nu};
             }),
             py::arg("eps_L"), py::arg("eps_R"), py::arg("nu"));
    m.def("mixing_angle", &mixing_angle, py::arg("params"));
    m.def("p_right", &p_right, py::arg("params"), py::arg("t"));

    py::class_<ZenoSchedule>(m, "ZenoSchedule")
        .def(py::init([](double nu0, double nu1, double t0, double t1, double horizon) {
                 return ZenoSchedule{nu0, nu1, t0, t1, horizon};
             }),
             py::arg("nu0"), py::arg("nu1"), py::arg("t0"), py::arg("t1"),
             py::arg("horizon"));
    m.def("zeno_probability", &zeno_probability, py::arg("schedule"), py::arg("t"));
    m.def("phase_integral", &phase_integral, py::arg("schedule"), py::arg("t"));
}
