#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nlkg/errors.hpp"
#include "nlkg/lattice.hpp"
#include "nlkg/params.hpp"
#include "nlkg/qfunc.hpp"
#include "nlkg/residual.hpp"
#include "nlkg/soliton.hpp"
#include "nlkg/waveforms.hpp"

namespace py = pybind11;
using namespace nlkg;

PYBIND11_MODULE(_nlkg, m) {
    m.doc() = "Nonlinear Klein-Gordon solutions, verification and lattice evolution";
    m.attr("__version__") = "0.1.0";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<PoleError>(m, "PoleError", error);
    py::register_exception<DomainError>(m, "DomainError", error);
    py::register_exception<SingularityError>(m, "SingularityError", error);
    py::register_exception<ConstraintError>(m, "ConstraintError", error);
    py::register_exception<NumericalError>(m, "NumericalError", error);

    py::enum_<ModelClass>(m, "ModelClass")
        .value("Complex", ModelClass::Complex)
        .value("RealCaseI", ModelClass::RealCaseI)
        .value("RealCaseII", ModelClass::RealCaseII);
    py::enum_<Branch>(m, "Branch").value("Cos", Branch::Cos).value("Sin", Branch::Sin);
    py::enum_<EnergyMethod>(m, "EnergyMethod")
        .value("ClosedForm", EnergyMethod::ClosedForm)
        .value("AdaptiveQuadrature", EnergyMethod::AdaptiveQuadrature);

    m.def("q_exp", &q_exp, py::arg("z"), py::arg("q"));
    m.def("q_exp_power", &q_exp_power, py::arg("z"), py::arg("q"), py::arg("r"));
    m.def("q_exp_power_deriv", &q_exp_power_deriv, py::arg("z"), py::arg("q"), py::arg("r"), py::arg("n"));

    py::class_<ModelParams>(m, "ModelParams")
        .def_readonly("model", &ModelParams::model)
        .def_readonly("alpha", &ModelParams::alpha)
        .def_readonly("q", &ModelParams::q)
        .def_readonly("theta", &ModelParams::theta)
        .def_readonly("b", &ModelParams::b)
        .def_readonly("a1", &ModelParams::a1)
        .def_readonly("a2", &ModelParams::a2)
        .def_readonly("beta", &ModelParams::beta)
        .def_readonly("gamma", &ModelParams::gamma)
        .def_readonly("delta", &ModelParams::delta)
        .def_readonly("nu", &ModelParams::nu)
        .def_readonly("c", &ModelParams::c)
        .def_readonly("m", &ModelParams::m)
        .def_readonly("lagrangian", &ModelParams::lagrangian)
        .def("to_record", [](const ModelParams& p) { return to_record(p); })
        .def_static("from_record", [](const std::string& s) { return from_record(s); })
        .def("__repr__", [](const ModelParams& p) { return "ModelParams(" + to_record(p) + ")"; });

    py::class_<WaveVector>(m, "WaveVector")
        .def(py::init([](double omega, std::vector<double> k, double mass) {
                 return WaveVector{omega, std::move(k), mass};
             }),
             py::arg("omega"), py::arg("k"), py::arg("m"))
        .def_static("on_shell", &WaveVector::on_shell, py::arg("k"), py::arg("m"))
        .def_readwrite("omega", &WaveVector::omega)
        .def_readwrite("k", &WaveVector::k)
        .def_readwrite("m", &WaveVector::m)
        .def("dispersion_residual", &WaveVector::dispersion_residual);

    m.def("solve_complex_class", &solve_complex_class, py::arg("alpha"), py::arg("q"), py::arg("a1"),
          py::arg("c"), py::arg("nu") = kDefaultSpacetimeDimension, py::arg("m") = 1.0);
    m.def("solve_real_case1", &solve_real_case1, py::arg("alpha"), py::arg("b"), py::arg("c"),
          py::arg("nu") = kDefaultSpacetimeDimension, py::arg("m") = 1.0);
    m.def("solve_real_case2", &solve_real_case2, py::arg("alpha"), py::arg("theta"), py::arg("b"),
          py::arg("c"), py::arg("nu") = kDefaultSpacetimeDimension, py::arg("m") = 1.0);
    m.def("validate", [](const ModelParams& p) {
        const auto r = validate(p);
        return py::make_tuple(r.ok, r.max_residual, r.violations);
    });

    m.def("exponent_pair", [](double alpha, double q, double a1) {
        const auto r = exponent_pair(alpha, q, a1);
        return py::make_tuple(r.r1, r.r2);
    });
    m.def("exponent_deltas", [](double alpha, double q, double a1) {
        const auto d = exponent_deltas(alpha, q, a1);
        return py::make_tuple(d.delta1, d.delta2);
    });
    m.def("phi1", [](const ModelParams& p, const WaveVector& w, std::vector<double> x, double t, Branch branch) {
        return FieldSolution::phi1(p, w, branch)(x, t);
    }, py::arg("params"), py::arg("wave"), py::arg("x"), py::arg("t"), py::arg("branch") = Branch::Cos);

    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("equation", &ResidualReport::equation)
        .def_readonly("max_rel", &ResidualReport::max_rel)
        .def_readonly("residual_rel", &ResidualReport::residual_rel)
        .def("to_json", [](const ResidualReport& r) { return to_json(r); });
    m.def("verify_pde", [](const ModelParams& p, const WaveVector& w, std::size_t n, Branch branch) {
        return verify_pde(FieldSolution::phi1(p, w, branch), n);
    }, py::arg("params"), py::arg("wave"), py::arg("n_points") = kDefaultSamplePoints,
          py::arg("branch") = Branch::Cos);
    m.def("verify_travelwave", &verify_travelwave, py::arg("params"), py::arg("branch") = Branch::Cos,
          py::arg("n_points") = kDefaultSamplePoints);

    py::class_<SolitonSetup>(m, "SolitonSetup")
        .def_readonly("params", &SolitonSetup::params)
        .def_readonly("wave", &SolitonSetup::wave)
        .def_readonly("kappa1", &SolitonSetup::kappa1)
        .def_readonly("kappa2", &SolitonSetup::kappa2)
        .def_readonly("lambda_", &SolitonSetup::lambda)
        .def_readonly("c2", &SolitonSetup::c2);
    m.def("make_soliton_setup", &make_soliton_setup, py::arg("alpha"), py::arg("q"), py::arg("wave"),
          py::arg("c1") = 1.0, py::arg("c2") = 1.0, py::arg("nu") = kDefaultSpacetimeDimension,
          py::arg("kappa1") = 1.0);
    m.def("density_closed_form", &density_closed_form, py::arg("setup"), py::arg("zhat"));
    m.def("density_from_hamiltonian", &density_from_hamiltonian, py::arg("setup"), py::arg("x"), py::arg("t"));
    m.def("soliton_energy", &soliton_energy, py::arg("setup"),
          py::arg("method") = EnergyMethod::AdaptiveQuadrature);

    m.def("convergence_study", [](const ModelParams& p, const WaveVector& w, double x0, double x1, double t_end,
                                  std::vector<double> dxs) {
        py::list rows;
        for (const auto& r : convergence_study(p, w, x0, x1, t_end, dxs)) {
            py::dict d;
            d["dx"] = r.dx;
            d["dt"] = r.dt;
            d["steps"] = r.steps;
            d["l2_error"] = r.l2_error;
            d["observed_order"] = r.observed_order ? py::cast(*r.observed_order) : py::none();
            d["energy_drift"] = r.energy_drift;
            rows.append(d);
        }
        return rows;
    }, py::arg("params"), py::arg("wave"), py::arg("x0"), py::arg("x1"), py::arg("t_end"), py::arg("dxs"));
    m.def("wave_period", &wave_period, py::arg("wave"));
}
