#pragma once

#include <optional>

#include "zenocat/coefficients.hpp"
#include "zenocat/fock.hpp"
#include "zenocat/states.hpp"

namespace zenocat {

enum class Scenario { FreeNonMarkov, Measured, Shuttered, MarkovReference };

struct PropagationConfig {
    int n_max = 40;
    double dt = 0.0;               // 0 -> auto: min(tau/20, 0.01/max(wc, w0))
    double step_error_tol = 1e-8;  // Richardson estimate bound
    bool check_invariants = true;
    double trace_tol = 1e-8;
    double herm_tol = 1e-12;
    double pos_tol = 1e-8;  // eigenvalues must stay above -pos_tol

    double resolve_dt(double segment, const ReservoirSpec& spec) const;
};

// Worst-case conservation numbers observed over all accepted steps.
struct PropagationDiagnostics {
    double worst_trace_dev = 0.0;
    double worst_herm = 0.0;
    double min_eigenvalue = 1.0;
    double step_error = 0.0;
    long steps = 0;

    void merge(const PropagationDiagnostics& o);
};

// Time-local master equation with coefficients Delta(t), gamma(t):
//   drho/dt = (D+g)/2 [2 a rho a+ - a+a rho - rho a+a]
//           + (D-g)/2 [2 a+ rho a - a a+ rho - rho a a+]
// stepped with classical RK4 at fixed dt; the result is the dt/2 pass of a
// Richardson pair and the extrapolated step error must stay below tolerance.
FockDensityMatrix propagate_nonmarkov(const FockDensityMatrix& rho0, double t_end,
                                      const ReservoirSpec& spec,
                                      const PropagationConfig& config,
                                      PropagationDiagnostics* diag = nullptr);

// Same generator with constant Markovian coefficients.
FockDensityMatrix propagate_markov_reference(const FockDensityMatrix& rho0, double t_end,
                                             const ReservoirSpec& spec,
                                             const PropagationConfig& config,
                                             PropagationDiagnostics* diag = nullptr);

// Nonselective energy measurement: zero all coherences, keep the diagonal.
FockDensityMatrix apply_projection(const FockDensityMatrix& rho);

// m cycles of [fresh-coupling segment of length tau, then projection].
// Each segment restarts the coefficient clock (the interruption refreshes the
// environment correlations).
FockDensityMatrix propagate_measured(const FockDensityMatrix& rho0, long m, double tau,
                                     const ReservoirSpec& spec,
                                     const PropagationConfig& config,
                                     PropagationDiagnostics* diag = nullptr);

// m fresh-coupling segments of length tau without projections.
FockDensityMatrix propagate_shuttered(const FockDensityMatrix& rho0, long m, double tau,
                                      const ReservoirSpec& spec,
                                      const PropagationConfig& config,
                                      PropagationDiagnostics* diag = nullptr);

// Snapshots at increasing interruption counts, sharing one coefficient table.
std::vector<FockDensityMatrix> propagate_measured_checkpoints(
    const FockDensityMatrix& rho0, const std::vector<long>& ms, double tau,
    const ReservoirSpec& spec, const PropagationConfig& config,
    PropagationDiagnostics* diag = nullptr);
std::vector<FockDensityMatrix> propagate_shuttered_checkpoints(
    const FockDensityMatrix& rho0, const std::vector<long>& ms, double tau,
    const ReservoirSpec& spec, const PropagationConfig& config,
    PropagationDiagnostics* diag = nullptr);

// Birth-death rate equation with constant rates:
//   dP_n/dt = gp [(n+1) P_{n+1} - n P_n] + gm [n P_{n-1} - (n+1) P_n],
// truncated so that total probability is conserved exactly; leakage into the
// top level beyond 1e-8 raises TruncationError.
NumberDistribution integrate_rate_equation(const NumberDistribution& p0, double t_end,
                                           const RateSet& rates);

}  // namespace zenocat
