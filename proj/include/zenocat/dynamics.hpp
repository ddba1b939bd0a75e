#pragma once

#include <complex>
#include <vector>

#include "zenocat/coefficients.hpp"
#include "zenocat/states.hpp"

namespace zenocat {

// Interruption schedule: shutter-on interval tau repeated m times; the off
// interval is idealized to zero, so coarse-grained time is t = m tau.
struct ShutterSchedule {
    double tau = 0.0;
    long m = 0;

    double time() const { return tau * static_cast<double>(m); }
};

// Constant-rate kinetics driving every closed-form observable.
struct EvolutionKernels {
    RateSet rates;

    double b_tau() const { return rates.b_tau(); }

    // a_t = (gamma_minus / b)(1 - e^{-b t}), continuous at b = 0 (-> gamma_minus t).
    double a_of_t(double t) const;

    // Gaussian exponent of the m-step recursion:
    // f_m = DeltaGamma (1 - e^{-m BigGamma}) / (1 - e^{-BigGamma}), -> m DeltaGamma at BigGamma = 0.
    double f_m(long m) const;

    // Kinetics of the interrupted evolution at interval tau.
    static EvolutionKernels shuttered(double tau, const ReservoirSpec& spec,
                                      const CoeffOptions& opt = {});
    // Stationary-rate reference (no interruption).
    static EvolutionKernels markov(const ReservoirSpec& spec);
    static EvolutionKernels from_rates(const RateSet& rates);
};

// m-step characteristic function
//   chi_m(xi) = exp[-f_m |xi|^2] chi_0(e^{-m BigGamma/2} xi).
std::complex<double> recursive_qcf(std::complex<double> xi, const ShutterSchedule& sched,
                                   const CatState& cat, const EvolutionKernels& kernels);
std::complex<double> recursive_qcf(std::complex<double> xi, const ShutterSchedule& sched,
                                   const CatState& cat, const ReservoirSpec& spec);

// Wigner function of the evolved cat: two displaced Gaussian lobes plus the
// oscillatory interference term.  The interference amplitude is
// 4 norm / (pi (2 a_t + 1)); at t = 0 this reproduces W(0,0) = 2/pi, the
// parity expectation of the even cat (cross-checked against the QCF Fourier
// transform oracle).
double analytic_wigner(std::complex<double> beta, double t,
                       const EvolutionKernels& kernels, const CatState& cat);

enum class PeakMode { Exact, Approximate };

// Interference peak W_I(beta=0, t).  Approximate mode is the short-time
// high-temperature form (4 norm/pi) exp[-2 gamma_minus (1+2 alpha^2) t].
double wigner_peak(double t, const EvolutionKernels& kernels, const CatState& cat,
                   PeakMode mode = PeakMode::Exact);

// ln[ W_I(0,t) / W_I(0,0) ] in exact mode, stable where the ratio underflows.
double log_wigner_peak_ratio(double t, const EvolutionKernels& kernels,
                             const CatState& cat);

// Closed-form P_n(t) for the cat under constant rates (log-space evaluation,
// terms are nonnegative; summed smallest-first).
double pn_closed_form(int n, double t, const EvolutionKernels& kernels,
                      const CatState& cat);

// Batch evaluation of pn_closed_form over a time list.
std::vector<NumberDistribution> pn_evolution(const std::vector<double>& times,
                                             const EvolutionKernels& kernels,
                                             const CatState& cat, int n_max);

// Rectangular Wigner-function sample.
struct WignerField {
    double beta_r_min = 0.0, beta_i_min = 0.0, h = 0.0;
    std::size_t nr = 0, ni = 0;
    std::vector<double> values;  // row-major over (i_r, i_i)

    double& at(std::size_t ir, std::size_t ii) { return values[ir * ni + ii]; }
    double at(std::size_t ir, std::size_t ii) const { return values[ir * ni + ii]; }
    double riemann_sum() const;
};

// Sample analytic_wigner on a centered square grid covering both lobes;
// extent [-4-|alpha|, 4+|alpha|]^2 with n points per axis.
WignerField wigner_field(double t, const EvolutionKernels& kernels, const CatState& cat,
                         std::size_t n_per_axis = 257);

}  // namespace zenocat
