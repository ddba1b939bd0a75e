#pragma once

#include <limits>
#include <vector>

#include "zenocat/reservoir.hpp"

namespace zenocat {

// Options for the frequency-domain quadratures behind the coefficients.
// tail_factor sets the cutoff Omega = max(2 wc + w0 + 1, w0 + tail_factor/t);
// the neglected tail is bounded analytically and added to the error estimate.
struct CoeffOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;
    double tail_factor = 20000.0;
};

// Diffusion coefficient Delta(t): second-order, equals
//   g^2 t * int_0^inf dw J(w) [N(w)+1/2] { sinc[(w-w0)t] + sinc[(w+w0)t] }.
double delta_of_t(double t, const ReservoirSpec& spec, const CoeffOptions& opt = {});

// Damping coefficient gamma(t):
//   g^2 (t/2) * int_0^inf dw J(w) { sinc[(w-w0)t] - sinc[(w+w0)t] }.
double gamma_of_t(double t, const ReservoirSpec& spec, const CoeffOptions& opt = {});

// Running integral BigGamma(t) = 2 int_0^t gamma(s) ds, evaluated as a single
// frequency quadrature (time integral done in closed form).
double big_gamma_of_t(double t, const ReservoirSpec& spec, const CoeffOptions& opt = {});

// Sampled coefficient curves on a uniform time grid starting at 0.
struct CoefficientCurve {
    std::vector<double> times;
    std::vector<double> delta;
    std::vector<double> gamma;

    static CoefficientCurve tabulate(const ReservoirSpec& spec, double t_max,
                                     std::size_t n_points,
                                     const CoeffOptions& opt = {});
};

// Decay rates of the coarse-grained dynamics with interruption interval tau,
// plus their stationary (Markovian) limits and the interruption integrals.
struct RateSet {
    double tau = 0.0;
    double gamma_plus = 0.0;    // downward rate gamma_1(tau)
    double gamma_minus = 0.0;   // upward rate gamma_{-1}(tau)
    double markov_plus = 0.0;   // Gamma [N(w0)+1]
    double markov_minus = 0.0;  // Gamma N(w0)
    // Interruption integrals; NaN until filled (see shutter_integrals).
    double big_gamma_tau = std::numeric_limits<double>::quiet_NaN();
    double delta_gamma_tau = std::numeric_limits<double>::quiet_NaN();

    double b_tau() const { return gamma_plus - gamma_minus; }
};

struct ShutterIntegrals {
    double big_gamma = 0.0;    // 2 int_0^tau gamma(t) dt
    double delta_gamma = 0.0;  // e^{-BigGamma(tau)} int_0^tau e^{BigGamma(t)} Delta(t) dt
};

// Overall Markovian rate scale Gamma = 2 g^2 r^2/(r^2+1) w0.
double markov_gamma_scale(const ReservoirSpec& spec);

// Markovian stationary rates (tau -> infinity limit of the measured rates).
RateSet markov_rates(const ReservoirSpec& spec);

// Measurement-modified rates from the frequency-domain form
//   gamma_{+-1}(tau) = (g^2 tau / 2) int_R dw kappa_beta(w) sinc^2[(w -+ w0) tau/2].
// The g^2/2 prefactor makes the tau->inf limits equal the Markovian rates and
// the time-average identity below exact.
RateSet measured_rates(double tau, const ReservoirSpec& spec, const CoeffOptions& opt = {});

// Same rates by the independent route gamma_{+-1} = (1/tau) int_0^tau [Delta(t) +- gamma(t)] dt,
// integrating the sampled coefficients directly.
RateSet rates_by_time_average(double tau, const ReservoirSpec& spec,
                              const CoeffOptions& opt = {});

// Interruption integrals of the piecewise-coupled evolution.
ShutterIntegrals shutter_integrals(double tau, const ReservoirSpec& spec,
                                   const CoeffOptions& opt = {});

// measured_rates with big_gamma_tau / delta_gamma_tau filled in.
RateSet full_rate_set(double tau, const ReservoirSpec& spec, const CoeffOptions& opt = {});

// Closed form for gamma_{-1}(tau) for the Ohmic-Lorentzian spectrum in the
// high-temperature regime: the occupation enters as N(w) = N(w0) w0 / w inside
// the integral (which is what makes the frequency integral elementary) and the
// emission/absorption asymmetry is dropped.  Requires ConstantN, whose n0 is
// read as N(w0).
double analytic_gamma_minus(double tau, const ReservoirSpec& spec);

}  // namespace zenocat
