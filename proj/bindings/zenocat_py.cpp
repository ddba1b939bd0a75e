#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zenocat/cli_ops.hpp"
#include "zenocat/dynamics.hpp"
#include "zenocat/errors.hpp"
#include "zenocat/oracle.hpp"
#include "zenocat/verify.hpp"

namespace py = pybind11;
using namespace zenocat;

PYBIND11_MODULE(_core, m) {
    m.doc() = "zeno / anti-zeno control of cat-state decoherence: C++ core";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<TruncationError>(m, "TruncationError", PyExc_ArithmeticError);

    py::enum_<SpectralKind>(m, "SpectralKind")
        .value("OhmicLorentzian", SpectralKind::OhmicLorentzian);
    py::enum_<ThermalKind>(m, "ThermalKind")
        .value("BoseEinstein", ThermalKind::BoseEinstein)
        .value("ConstantN", ThermalKind::ConstantN);

    py::class_<ReservoirSpec>(m, "ReservoirSpec")
        .def(py::init<>())
        .def_readwrite("spectral_kind", &ReservoirSpec::spectral_kind)
        .def_readwrite("omega_c", &ReservoirSpec::omega_c)
        .def_readwrite("omega_0", &ReservoirSpec::omega_0)
        .def_readwrite("g", &ReservoirSpec::g)
        .def_readwrite("thermal_kind", &ReservoirSpec::thermal_kind)
        .def_readwrite("theta", &ReservoirSpec::theta)
        .def_readwrite("n0", &ReservoirSpec::n0)
        .def("r", &ReservoirSpec::r)
        .def("n_omega0", &ReservoirSpec::n_omega0)
        .def("validate", &ReservoirSpec::validate)
        .def_static("bose_einstein", &ReservoirSpec::bose_einstein, py::arg("omega_c"),
                    py::arg("g"), py::arg("theta"), py::arg("omega_0") = 1.0)
        .def_static("constant_n", &ReservoirSpec::constant_n, py::arg("omega_c"),
                    py::arg("g"), py::arg("n0"), py::arg("omega_0") = 1.0);

    m.def("ohmic_density", &ohmic_density, py::arg("omega"), py::arg("spec"));
    m.def("thermal_occupation", &thermal_occupation, py::arg("omega"), py::arg("spec"));
    m.def("kappa_beta", &kappa_beta, py::arg("omega"), py::arg("spec"));

    m.def("delta_of_t",
          [](double t, const ReservoirSpec& s) { return delta_of_t(t, s); });
    m.def("gamma_of_t",
          [](double t, const ReservoirSpec& s) { return gamma_of_t(t, s); });
    m.def("markov_gamma_scale", &markov_gamma_scale);

    py::class_<RateSet>(m, "RateSet")
        .def_readonly("tau", &RateSet::tau)
        .def_readonly("gamma_plus", &RateSet::gamma_plus)
        .def_readonly("gamma_minus", &RateSet::gamma_minus)
        .def_readonly("markov_plus", &RateSet::markov_plus)
        .def_readonly("markov_minus", &RateSet::markov_minus)
        .def_readonly("big_gamma_tau", &RateSet::big_gamma_tau)
        .def_readonly("delta_gamma_tau", &RateSet::delta_gamma_tau)
        .def("b_tau", &RateSet::b_tau);

    m.def("measured_rates",
          [](double tau, const ReservoirSpec& s) { return measured_rates(tau, s); });
    m.def("rates_by_time_average", [](double tau, const ReservoirSpec& s) {
        return rates_by_time_average(tau, s);
    });
    m.def("markov_rates", &markov_rates);
    m.def("analytic_gamma_minus", &analytic_gamma_minus, py::arg("tau"), py::arg("spec"));
    m.def("shutter_integrals", [](double tau, const ReservoirSpec& s) {
        const auto si = shutter_integrals(tau, s);
        return py::make_tuple(si.big_gamma, si.delta_gamma);
    });
    m.def("full_rate_set",
          [](double tau, const ReservoirSpec& s) { return full_rate_set(tau, s); });

    py::class_<CatState>(m, "CatState")
        .def_static("make", &CatState::make, py::arg("alpha"))
        .def_readonly("alpha", &CatState::alpha)
        .def_readonly("norm", &CatState::norm)
        .def("mean_photon_number", &CatState::mean_photon_number);
    m.def("default_n_max", &default_n_max);

    py::class_<NumberDistribution>(m, "NumberDistribution")
        .def_readonly("probs", &NumberDistribution::probs)
        .def("n_max", &NumberDistribution::n_max)
        .def("sum", &NumberDistribution::sum)
        .def("mean", &NumberDistribution::mean)
        .def("parity_contrast", &NumberDistribution::parity_contrast);

    m.def("cat_qcf", &cat_qcf, py::arg("xi"), py::arg("cat"));
    m.def("cat_number_distribution", &cat_number_distribution, py::arg("cat"),
          py::arg("n_max"));

    py::class_<FockDensityMatrix>(m, "FockDensityMatrix")
        .def("dim", &FockDensityMatrix::dim)
        .def("trace_real", &FockDensityMatrix::trace_real)
        .def("hermiticity_error", &FockDensityMatrix::hermiticity_error)
        .def("min_eigenvalue", &FockDensityMatrix::min_eigenvalue)
        .def("purity", &FockDensityMatrix::purity)
        .def("diagonal", &FockDensityMatrix::diagonal)
        .def("max_offdiag_abs", &FockDensityMatrix::max_offdiag_abs)
        .def("qcf", &FockDensityMatrix::qcf);
    m.def("cat_density_matrix", &cat_density_matrix, py::arg("cat"), py::arg("n_max"));

    py::class_<ShutterSchedule>(m, "ShutterSchedule")
        .def(py::init([](double tau, long mm) {
                 return ShutterSchedule{tau, mm};
             }),
             py::arg("tau"), py::arg("m"))
        .def_readwrite("tau", &ShutterSchedule::tau)
        .def_readwrite("m", &ShutterSchedule::m)
        .def("time", &ShutterSchedule::time);

    py::class_<EvolutionKernels>(m, "EvolutionKernels")
        .def_readonly("rates", &EvolutionKernels::rates)
        .def("b_tau", &EvolutionKernels::b_tau)
        .def("a_of_t", &EvolutionKernels::a_of_t)
        .def("f_m", &EvolutionKernels::f_m)
        .def_static("shuttered",
                    [](double tau, const ReservoirSpec& s) {
                        return EvolutionKernels::shuttered(tau, s);
                    })
        .def_static("markov", &EvolutionKernels::markov)
        .def_static("from_rates", &EvolutionKernels::from_rates);

    m.def("recursive_qcf",
          [](std::complex<double> xi, const ShutterSchedule& sc, const CatState& cat,
             const EvolutionKernels& k) { return recursive_qcf(xi, sc, cat, k); });
    m.def("analytic_wigner", &analytic_wigner, py::arg("beta"), py::arg("t"),
          py::arg("kernels"), py::arg("cat"));
    py::enum_<PeakMode>(m, "PeakMode")
        .value("Exact", PeakMode::Exact)
        .value("Approximate", PeakMode::Approximate);
    m.def("wigner_peak", &wigner_peak, py::arg("t"), py::arg("kernels"), py::arg("cat"),
          py::arg("mode") = PeakMode::Exact);
    m.def("log_wigner_peak_ratio", &log_wigner_peak_ratio);
    m.def("pn_closed_form", &pn_closed_form, py::arg("n"), py::arg("t"),
          py::arg("kernels"), py::arg("cat"));
    m.def("pn_evolution", &pn_evolution, py::arg("times"), py::arg("kernels"),
          py::arg("cat"), py::arg("n_max"));

    py::class_<PropagationConfig>(m, "PropagationConfig")
        .def(py::init<>())
        .def_readwrite("n_max", &PropagationConfig::n_max)
        .def_readwrite("dt", &PropagationConfig::dt)
        .def_readwrite("step_error_tol", &PropagationConfig::step_error_tol)
        .def_readwrite("check_invariants", &PropagationConfig::check_invariants);

    m.def("propagate_nonmarkov",
          [](const FockDensityMatrix& r0, double t, const ReservoirSpec& s,
             const PropagationConfig& c) { return propagate_nonmarkov(r0, t, s, c); });
    m.def("propagate_markov_reference",
          [](const FockDensityMatrix& r0, double t, const ReservoirSpec& s,
             const PropagationConfig& c) {
              return propagate_markov_reference(r0, t, s, c);
          });
    m.def("apply_projection", &apply_projection);
    m.def("propagate_measured",
          [](const FockDensityMatrix& r0, long mm, double tau, const ReservoirSpec& s,
             const PropagationConfig& c) {
              return propagate_measured(r0, mm, tau, s, c);
          });
    m.def("propagate_shuttered",
          [](const FockDensityMatrix& r0, long mm, double tau, const ReservoirSpec& s,
             const PropagationConfig& c) {
              return propagate_shuttered(r0, mm, tau, s, c);
          });
    m.def("integrate_rate_equation", &integrate_rate_equation, py::arg("p0"),
          py::arg("t_end"), py::arg("rates"));

    m.def("rj_rate_quadrature", &verify::rj_rate_quadrature);
}
