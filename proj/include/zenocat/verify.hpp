#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "zenocat/config.hpp"
#include "zenocat/dynamics.hpp"
#include "zenocat/oracle.hpp"

namespace zenocat::verify {

// ---- oracle-grade reference computations -----------------------------------

// Quadrature comparator for the closed-form rate: the occupation enters as
// N(w) = n0 w0 / w, which turns J(w) N(w) into a pure Lorentzian,
//   (g^2 tau / 2) int_R dw (2 n0 w0 / pi) wc^2/(wc^2+w^2) sinc^2[(w+w0) tau/2].
double rj_rate_quadrature(double tau, const ReservoirSpec& spec);

// Slow nested-quadrature references for the coefficient double integrals; the
// inner time integral is evaluated numerically instead of in closed form.
double delta_double_integral_reference(double t, const ReservoirSpec& spec);
double gamma_double_integral_reference(double t, const ReservoirSpec& spec);

// Exact damping coefficient for the Ohmic-Lorentzian spectrum:
//   g^2 wc^2 [w0 - e^{-wc t}(w0 cos(w0 t) + wc sin(w0 t))] / (wc^2 + w0^2).
double gamma_closed_form_ohmic(double t, const ReservoirSpec& spec);

// Fourier transform of a characteristic function sampler onto a centered
// square beta grid: W(b) = (1/pi^2) int d^2xi chi(xi) e^{b xi^* - b^* xi}.
WignerField wigner_by_fourier(
    const std::function<std::complex<double>(std::complex<double>)>& chi,
    double xi_extent, double beta_extent, std::size_t n_beta, unsigned threads = 0);

// Log-spaced grid (inclusive endpoints).
std::vector<double> log_grid(double lo, double hi, int n);

double rel_err(double got, double want);

// ---- verify report ----------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;
    double tol = 0.0;
    std::string note;
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string to_string() const;
};

// Full oracle-certification suite (identity, closed forms vs oracles, scenario
// equivalence, Fourier duality, interference-amplitude resolution, output
// determinism, and a deliberately corrupted negative control).
Report run(const RunConfig& cfg);

}  // namespace zenocat::verify
