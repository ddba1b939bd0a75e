#include <doctest.h>

#include <cmath>
#include <complex>

#include "zenocat/dynamics.hpp"
#include "zenocat/errors.hpp"
#include "zenocat/oracle.hpp"

using namespace zenocat;
using cplx = std::complex<double>;

TEST_CASE("propagation config") {
    ReservoirSpec s = ReservoirSpec::constant_n(10.0, 0.1, 2.0);
    PropagationConfig pc;
    CHECK(pc.resolve_dt(1.0, s) == doctest::Approx(0.001));   // 0.01/omega_c
    CHECK(pc.resolve_dt(0.004, s) == doctest::Approx(0.0002));  // tau/20 cap
    pc.dt = 1e-4;
    CHECK(pc.resolve_dt(1.0, s) == doctest::Approx(1e-4));
}

TEST_CASE("free propagation: identity at t = 0 and near-stability of the vacuum") {
    ReservoirSpec s = ReservoirSpec::constant_n(1.0, 0.1, 0.0);
    PropagationConfig pc;
    pc.n_max = 12;
    FockDensityMatrix vac = cat_density_matrix(CatState::make(0.0), 12);

    FockDensityMatrix same = propagate_nonmarkov(vac, 0.0, s, pc);
    CHECK((same.m - vac.m).cwiseAbs().maxCoeff() == 0.0);

    // with zero occupation the only leakage is the transient absorption
    // channel, bounded by the running coefficient average
    for (double t : {0.3, 2.0}) {
        FockDensityMatrix out = propagate_nonmarkov(vac, t, s, pc);
        const double leak = 1.0 - out.diagonal()[0];
        const double bound = t * rates_by_time_average(t, s).gamma_minus;
        CHECK(leak >= -1e-12);
        CHECK(leak <= 1.2 * bound + 1e-12);
    }
}

TEST_CASE("free propagation approaches the stationary-rate reference") {
    ReservoirSpec s = ReservoirSpec::constant_n(10.0, 0.1, 2.0);
    PropagationConfig pc;
    pc.n_max = 34;
    CatState cat = CatState::make(2.0);
    FockDensityMatrix rho = cat_density_matrix(cat, 34);
    PropagationDiagnostics d1, d2;
    const double t = 3.0;  // omega_c t = 30
    FockDensityMatrix nm = propagate_nonmarkov(rho, t, s, pc, &d1);
    FockDensityMatrix mk = propagate_markov_reference(rho, t, s, pc, &d2);
    const auto a = nm.diagonal(), b = mk.diagonal();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    CHECK(worst <= 0.02);
    // conservation along the way
    CHECK(d1.worst_trace_dev <= 1e-8);
    CHECK(d1.worst_herm <= 1e-12);
    CHECK(d1.min_eigenvalue >= -1e-8);
    CHECK(d1.step_error <= pc.step_error_tol);
    CHECK(d2.worst_trace_dev <= 1e-8);
}

TEST_CASE("nonselective projection") {
    CatState cat = CatState::make(2.0);
    FockDensityMatrix rho = cat_density_matrix(cat, 24);
    FockDensityMatrix p = apply_projection(rho);
    CHECK(p.max_offdiag_abs() == 0.0);
    // diagonal untouched, odd components stay empty
    NumberDistribution nd = cat_number_distribution(cat, 24);
    const auto d = p.diagonal();
    for (int n = 0; n <= 24; ++n) {
        CHECK(std::abs(d[n] - nd.probs[n]) <= 1e-14);
        if (n % 2 == 1) CHECK(d[n] == 0.0);
    }
    // idempotent; diagonal input is a fixed point
    FockDensityMatrix pp = apply_projection(p);
    CHECK((pp.m - p.m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("measured and interrupted-coupling scenarios") {
    ReservoirSpec s = ReservoirSpec::constant_n(10.0, 0.01, 2.0);  // weak coupling
    const double tau = 0.01;  // omega_c tau = 0.1
    PropagationConfig pc;
    pc.n_max = 45;
    CatState cat = CatState::make(2.0);
    FockDensityMatrix rho0 = cat_density_matrix(cat, 45);

    FockDensityMatrix id = propagate_measured(rho0, 0, tau, s, pc);
    CHECK((id.m - rho0.m).cwiseAbs().maxCoeff() == 0.0);

    PropagationDiagnostics dm, ds;
    auto meas = propagate_measured_checkpoints(rho0, {1, 5}, tau, s, pc, &dm);
    auto shut = propagate_shuttered_checkpoints(rho0, {1, 5}, tau, s, pc, &ds);

    // one segment without projection equals the free propagation over tau
    FockDensityMatrix free1 = propagate_nonmarkov(rho0, tau, s, pc);
    CHECK((shut[0].m - free1.m).cwiseAbs().maxCoeff() <= 1e-14);

    for (std::size_t i = 0; i < meas.size(); ++i) {
        // measurements keep only populations; interruptions keep coherences
        CHECK(meas[i].max_offdiag_abs() == 0.0);
        CHECK(shut[i].max_offdiag_abs() > 1e-3);
        const auto a = meas[i].diagonal(), b = shut[i].diagonal();
        for (std::size_t n = 0; n < a.size(); ++n)
            CHECK(std::abs(a[n] - b[n]) <= 1e-6);
    }

    // populations follow the closed form built on the measured rates
    EvolutionKernels k = EvolutionKernels::shuttered(tau, s);
    const auto d5 = meas[1].diagonal();
    double worst = 0.0;
    for (int n = 0; n <= 45; ++n)
        worst = std::max(worst, std::abs(pn_closed_form(n, 5.0 * tau, k, cat) - d5[n]));
    CHECK(worst <= 1e-6);

    // characteristic function of the interrupted evolution matches the
    // m-step recursion
    for (std::size_t i = 0; i < shut.size(); ++i) {
        const long m = (i == 0) ? 1 : 5;
        for (cplx xi : {cplx(0.3, 0.2), cplx(1.0, 0.0), cplx(0.8, -1.1)}) {
            const cplx oracle = shut[i].qcf(xi);
            const cplx closed = recursive_qcf(xi, {tau, m}, cat, k);
            CHECK(std::abs(oracle - closed) <= 1e-5);
        }
    }

    // conservation diagnostics over every accepted step
    for (const auto* d : {&dm, &ds}) {
        CHECK(d->worst_trace_dev <= 1e-8);
        CHECK(d->worst_herm <= 1e-12);
        CHECK(d->min_eigenvalue >= -1e-8);
    }
}

TEST_CASE("rate-equation integrator") {
    CatState cat = CatState::make(2.0);
    NumberDistribution p0 = cat_number_distribution(cat, 55);

    RateSet zero;
    zero.tau = 1.0;
    NumberDistribution frozen = integrate_rate_equation(p0, 5.0, zero);
    for (std::size_t n = 0; n < p0.probs.size(); ++n)
        CHECK(frozen.probs[n] == p0.probs[n]);

    ReservoirSpec s = ReservoirSpec::constant_n(10.0, 0.1, 2.0);
    EvolutionKernels k = EvolutionKernels::markov(s);
    const double b = k.b_tau();

    // agreement with the closed form
    for (double frac : {0.3, 1.0}) {
        NumberDistribution ode = integrate_rate_equation(p0, frac / b, k.rates);
        CHECK(std::abs(ode.sum() - p0.sum()) <= 1e-10);
        double worst = 0.0;
        for (int n = 0; n <= 45; ++n)
            worst = std::max(worst,
                             std::abs(pn_closed_form(n, frac / b, k, cat) - ode.probs[n]));
        CHECK(worst <= 1e-8);
    }

    // stationary state is thermal with mean gamma_minus / (gamma_plus - gamma_minus)
    NumberDistribution late = integrate_rate_equation(p0, 60.0 / b, k.rates);
    CHECK(late.mean() == doctest::Approx(2.0).epsilon(1e-6));
    for (int n = 0; n <= 8; ++n)
        CHECK(late.probs[n] ==
              doctest::Approx(std::pow(2.0 / 3.0, n) / 3.0).epsilon(1e-6));

    // a distribution that runs into the truncation boundary is rejected
    NumberDistribution small = cat_number_distribution(cat, 40);
    CHECK_THROWS_AS(integrate_rate_equation(small, 3.0 / b, k.rates), TruncationError);

    NumberDistribution bad;
    bad.probs = {0.4, 0.4};  // not normalized
    CHECK_THROWS_AS(integrate_rate_equation(bad, 1.0, k.rates), DomainError);
}
