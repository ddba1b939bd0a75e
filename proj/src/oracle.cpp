#include "zenocat/oracle.hpp"

#include <cmath>
#include <sstream>

#include "zenocat/errors.hpp"

namespace zenocat {

namespace {

// RHS of the time-local generator for given coefficient values.
void apply_generator(const Eigen::MatrixXcd& rho, double dcoef, double gcoef,
                     Eigen::MatrixXcd& out) {
    const int d = static_cast<int>(rho.rows());
    const double dp = 0.5 * (dcoef + gcoef);  // emission channel weight
    const double dm = 0.5 * (dcoef - gcoef);  // absorption channel weight
    out.resize(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            std::complex<double> v = 0.0;
            if (i + 1 < d && j + 1 < d)
                v += dp * 2.0 * std::sqrt(double(i + 1) * double(j + 1)) * rho(i + 1, j + 1);
            v -= dp * double(i + j) * rho(i, j);
            if (i > 0 && j > 0)
                v += dm * 2.0 * std::sqrt(double(i) * double(j)) * rho(i - 1, j - 1);
            v -= dm * double(i + j + 2) * rho(i, j);
            out(i, j) = v;
        }
    }
}

struct CoefficientTable {
    double dt_quarter = 0.0;  // tabulation spacing
    std::vector<double> delta, gamma;

    double d_at(std::size_t k) const { return delta[k]; }
    double g_at(std::size_t k) const { return gamma[k]; }
};

CoefficientTable tabulate_for(const ReservoirSpec& spec, double t_end, double dt,
                              bool markov) {
    CoefficientTable tab;
    tab.dt_quarter = 0.25 * dt;
    const std::size_t n = static_cast<std::size_t>(std::llround(t_end / tab.dt_quarter)) + 1;
    tab.delta.resize(n);
    tab.gamma.resize(n);
    if (markov) {
        const RateSet mk = markov_rates(spec);
        const double dcoef = 0.5 * (mk.markov_plus + mk.markov_minus);
        const double gcoef = 0.5 * (mk.markov_plus - mk.markov_minus);
        for (std::size_t k = 0; k < n; ++k) {
            tab.delta[k] = dcoef;
            tab.gamma[k] = gcoef;
        }
        return tab;
    }
    CoeffOptions opt;
    opt.tail_factor = 3000.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = tab.dt_quarter * static_cast<double>(k);
        tab.delta[k] = delta_of_t(t, spec, opt);
        tab.gamma[k] = gamma_of_t(t, spec, opt);
    }
    return tab;
}

void check_step(const Eigen::MatrixXcd& rho, const PropagationConfig& cfg,
                PropagationDiagnostics* diag, long step) {
    const double tr_dev = std::abs(rho.trace().real() - 1.0);
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    // positivity certificate: Cholesky of rho + pos_tol*I succeeding means the
    // spectrum stays above -pos_tol; the exact eigenvalue is only computed on
    // failure (and at checkpoints)
    Eigen::MatrixXcd shifted = 0.5 * (rho + rho.adjoint());
    shifted.diagonal().array() += cfg.pos_tol;
    Eigen::LLT<Eigen::MatrixXcd> llt(shifted);
    double mineig = 0.0;
    bool pos_ok = (llt.info() == Eigen::Success);
    if (!pos_ok) {
        FockDensityMatrix tmp;
        tmp.m = rho;
        mineig = tmp.min_eigenvalue();
        pos_ok = mineig >= -cfg.pos_tol;
    }
    if (diag) {
        diag->worst_trace_dev = std::max(diag->worst_trace_dev, tr_dev);
        diag->worst_herm = std::max(diag->worst_herm, herm);
        if (!pos_ok || mineig < 0.0)
            diag->min_eigenvalue = std::min(diag->min_eigenvalue, mineig);
        diag->steps += 1;
    }
    if (tr_dev > cfg.trace_tol || herm > cfg.herm_tol || !pos_ok) {
        std::ostringstream os;
        os << "propagation invariant violated at step " << step << ": trace_dev=" << tr_dev
           << " herm=" << herm << " positivity_ok=" << pos_ok;
        throw NumericalError(os.str());
    }
}

// RK4 over [0, t_end] with nsteps steps; coefficients read from the table at
// stride quarter-steps (stride 4 = full dt pass, stride 2 = half dt pass).
Eigen::MatrixXcd rk4_pass(const Eigen::MatrixXcd& rho0, const CoefficientTable& tab,
                          long nsteps, std::size_t stride, double dt,
                          const PropagationConfig& cfg, PropagationDiagnostics* diag,
                          bool check) {
    Eigen::MatrixXcd rho = rho0, k1, k2, k3, k4, tmp;
    for (long s = 0; s < nsteps; ++s) {
        const std::size_t base = static_cast<std::size_t>(s) * stride;
        const std::size_t half = base + stride / 2;
        const std::size_t full = base + stride;
        apply_generator(rho, tab.d_at(base), tab.g_at(base), k1);
        tmp = rho + (0.5 * dt) * k1;
        apply_generator(tmp, tab.d_at(half), tab.g_at(half), k2);
        tmp = rho + (0.5 * dt) * k2;
        apply_generator(tmp, tab.d_at(half), tab.g_at(half), k3);
        tmp = rho + dt * k3;
        apply_generator(tmp, tab.d_at(full), tab.g_at(full), k4);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (check) check_step(rho, cfg, diag, s + 1);
    }
    return rho;
}

FockDensityMatrix propagate_table(const FockDensityMatrix& rho0, double t_end,
                                  const CoefficientTable& tab, double dt, long nsteps,
                                  const PropagationConfig& cfg,
                                  PropagationDiagnostics* diag) {
    (void)t_end;
    // coarse pass (step dt) for the Richardson estimate, fine pass (dt/2) kept
    Eigen::MatrixXcd coarse =
        rk4_pass(rho0.m, tab, nsteps, 4, dt, cfg, nullptr, false);
    Eigen::MatrixXcd fine =
        rk4_pass(rho0.m, tab, 2 * nsteps, 2, 0.5 * dt, cfg, diag, cfg.check_invariants);
    const double err = (fine - coarse).cwiseAbs().maxCoeff() / 15.0;
    if (diag) diag->step_error = std::max(diag->step_error, err);
    if (err > cfg.step_error_tol) {
        std::ostringstream os;
        os << "propagation step error " << err << " exceeds tolerance " << cfg.step_error_tol
           << " (dt=" << dt << ", steps=" << nsteps << "); refine dt";
        throw NumericalError(os.str());
    }
    FockDensityMatrix out;
    out.m = std::move(fine);
    return out;
}

}  // namespace

double PropagationConfig::resolve_dt(double segment, const ReservoirSpec& spec) const {
    double d = dt;
    if (d <= 0.0) d = 0.01 / std::max(spec.omega_c, spec.omega_0);
    d = std::min(d, segment / 20.0);
    return d;
}

void PropagationDiagnostics::merge(const PropagationDiagnostics& o) {
    worst_trace_dev = std::max(worst_trace_dev, o.worst_trace_dev);
    worst_herm = std::max(worst_herm, o.worst_herm);
    min_eigenvalue = std::min(min_eigenvalue, o.min_eigenvalue);
    step_error = std::max(step_error, o.step_error);
    steps += o.steps;
}

FockDensityMatrix propagate_nonmarkov(const FockDensityMatrix& rho0, double t_end,
                                      const ReservoirSpec& spec,
                                      const PropagationConfig& config,
                                      PropagationDiagnostics* diag) {
    if (t_end < 0.0) throw DomainError("propagate_nonmarkov: t_end must be >= 0");
    if (t_end == 0.0) return rho0;
    spec.validate();
    const double dt0 = config.resolve_dt(t_end, spec);
    const long nsteps = std::max(1L, static_cast<long>(std::ceil(t_end / dt0)));
    const double dt = t_end / static_cast<double>(nsteps);
    CoefficientTable tab = tabulate_for(spec, t_end, dt, false);
    return propagate_table(rho0, t_end, tab, dt, nsteps, config, diag);
}

FockDensityMatrix propagate_markov_reference(const FockDensityMatrix& rho0, double t_end,
                                             const ReservoirSpec& spec,
                                             const PropagationConfig& config,
                                             PropagationDiagnostics* diag) {
    if (t_end < 0.0) throw DomainError("propagate_markov_reference: t_end must be >= 0");
    if (t_end == 0.0) return rho0;
    spec.validate();
    const double dt0 = config.resolve_dt(t_end, spec);
    const long nsteps = std::max(1L, static_cast<long>(std::ceil(t_end / dt0)));
    const double dt = t_end / static_cast<double>(nsteps);
    CoefficientTable tab = tabulate_for(spec, t_end, dt, true);
    return propagate_table(rho0, t_end, tab, dt, nsteps, config, diag);
}

FockDensityMatrix apply_projection(const FockDensityMatrix& rho) {
    FockDensityMatrix out(rho.n_max());
    for (int i = 0; i < rho.dim(); ++i) out.m(i, i) = rho.m(i, i).real();
    return out;
}

namespace {

std::vector<FockDensityMatrix> run_segments(const FockDensityMatrix& rho0,
                                            const std::vector<long>& checkpoints,
                                            double tau, const ReservoirSpec& spec,
                                            const PropagationConfig& config,
                                            PropagationDiagnostics* diag, bool project) {
    if (checkpoints.empty()) throw DomainError("segment propagation: no checkpoints");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 0) throw DomainError("segment propagation: m must be >= 0");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw DomainError("segment propagation: checkpoints must be increasing");
    }
    if (!(tau > 0.0)) throw DomainError("segment propagation: tau must be > 0");
    spec.validate();
    const double dt0 = config.resolve_dt(tau, spec);
    const long nsteps = std::max(1L, static_cast<long>(std::ceil(tau / dt0)));
    const double dt = tau / static_cast<double>(nsteps);
    // the coefficient clock restarts each segment, so one table serves all m
    CoefficientTable tab = tabulate_for(spec, tau, dt, false);
    std::vector<FockDensityMatrix> out;
    FockDensityMatrix rho = rho0;
    long seg = 0;
    for (long target : checkpoints) {
        for (; seg < target; ++seg) {
            rho = propagate_table(rho, tau, tab, dt, nsteps, config, diag);
            if (project) rho = apply_projection(rho);
        }
        out.push_back(rho);
    }
    return out;
}

}  // namespace

std::vector<FockDensityMatrix> propagate_measured_checkpoints(
    const FockDensityMatrix& rho0, const std::vector<long>& ms, double tau,
    const ReservoirSpec& spec, const PropagationConfig& config,
    PropagationDiagnostics* diag) {
    return run_segments(rho0, ms, tau, spec, config, diag, true);
}

std::vector<FockDensityMatrix> propagate_shuttered_checkpoints(
    const FockDensityMatrix& rho0, const std::vector<long>& ms, double tau,
    const ReservoirSpec& spec, const PropagationConfig& config,
    PropagationDiagnostics* diag) {
    return run_segments(rho0, ms, tau, spec, config, diag, false);
}

FockDensityMatrix propagate_measured(const FockDensityMatrix& rho0, long m, double tau,
                                     const ReservoirSpec& spec,
                                     const PropagationConfig& config,
                                     PropagationDiagnostics* diag) {
    if (m == 0) return rho0;
    return propagate_measured_checkpoints(rho0, {m}, tau, spec, config, diag).back();
}

FockDensityMatrix propagate_shuttered(const FockDensityMatrix& rho0, long m, double tau,
                                      const ReservoirSpec& spec,
                                      const PropagationConfig& config,
                                      PropagationDiagnostics* diag) {
    if (m == 0) return rho0;
    return propagate_shuttered_checkpoints(rho0, {m}, tau, spec, config, diag).back();
}

NumberDistribution integrate_rate_equation(const NumberDistribution& p0, double t_end,
                                           const RateSet& rates) {
    if (t_end < 0.0) throw DomainError("integrate_rate_equation: t_end must be >= 0");
    const double tol = 1e-10;
    if (std::abs(p0.sum() - 1.0) > 1e-6)
        throw DomainError("integrate_rate_equation: p0 not normalized");
    const int d = static_cast<int>(p0.probs.size());
    const double gp = rates.gamma_plus, gm = rates.gamma_minus;
    std::vector<double> P = p0.probs;
    if (t_end == 0.0 || (gp == 0.0 && gm == 0.0)) {
        NumberDistribution out;
        out.probs = P;
        return out;
    }
    // conservative truncation: no upward flux out of the top level
    auto rhs = [&](const std::vector<double>& p, std::vector<double>& dp) {
        for (int n = 0; n < d; ++n) {
            double v = -gp * n * p[n];
            if (n + 1 < d) v += gp * (n + 1.0) * p[n + 1];
            if (n > 0) v += gm * n * p[n - 1];
            if (n + 1 < d) v -= gm * (n + 1.0) * p[n];
            dp[n] = v;
        }
    };
    const double rate_scale = (gp + gm) * static_cast<double>(d + 1);
    auto run = [&](long nsteps, double* top_seen) {
        std::vector<double> p = P, k1(d), k2(d), k3(d), k4(d), tmp(d);
        const double h = t_end / static_cast<double>(nsteps);
        for (long s = 0; s < nsteps; ++s) {
            rhs(p, k1);
            for (int i = 0; i < d; ++i) tmp[i] = p[i] + 0.5 * h * k1[i];
            rhs(tmp, k2);
            for (int i = 0; i < d; ++i) tmp[i] = p[i] + 0.5 * h * k2[i];
            rhs(tmp, k3);
            for (int i = 0; i < d; ++i) tmp[i] = p[i] + h * k3[i];
            rhs(tmp, k4);
            for (int i = 0; i < d; ++i)
                p[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            if (top_seen) *top_seen = std::max(*top_seen, p[d - 1]);
        }
        return p;
    };
    long nsteps =
        std::max(32L, static_cast<long>(std::ceil(t_end * rate_scale / 0.02)));
    std::vector<double> fine;
    double top_seen = 0.0;
    for (int attempt = 0;; ++attempt) {
        std::vector<double> coarse = run(nsteps, nullptr);
        top_seen = 0.0;
        fine = run(2 * nsteps, &top_seen);
        double err = 0.0;
        for (int i = 0; i < d; ++i) err = std::max(err, std::abs(fine[i] - coarse[i]) / 15.0);
        if (err <= 1e-11) break;
        if (attempt >= 4) {
            std::ostringstream os;
            os << "integrate_rate_equation: step error " << err << " above 1e-11 after "
               << attempt + 1 << " refinements";
            throw NumericalError(os.str());
        }
        nsteps *= 2;
    }
    if (top_seen > 1e-8) {
        std::ostringstream os;
        os << "integrate_rate_equation: top-level occupation " << top_seen
           << " exceeds 1e-8; enlarge n_max";
        throw TruncationError(os.str());
    }
    NumberDistribution out;
    out.probs = std::move(fine);
    if (std::abs(out.sum() - p0.sum()) > tol)
        throw NumericalError("integrate_rate_equation: probability drift beyond 1e-10");
    return out;
}

}  // namespace zenocat
