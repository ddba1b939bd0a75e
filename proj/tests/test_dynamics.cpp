#include <doctest.h>

#include <cmath>
#include <complex>

#include "zenocat/dynamics.hpp"
#include "zenocat/errors.hpp"
#include "zenocat/oracle.hpp"
#include "zenocat/verify.hpp"

using namespace zenocat;
using cplx = std::complex<double>;

namespace {

RateSet synthetic_rates(double gp, double gm, double bg, double dg, double tau = 0.1) {
    RateSet rs;
    rs.tau = tau;
    rs.gamma_plus = gp;
    rs.gamma_minus = gm;
    rs.markov_plus = gp;
    rs.markov_minus = gm;
    rs.big_gamma_tau = bg;
    rs.delta_gamma_tau = dg;
    return rs;
}

}  // namespace

TEST_CASE("evolution kernel building blocks") {
    EvolutionKernels k = EvolutionKernels::from_rates(synthetic_rates(0.06, 0.04, 0.1, 0.05));
    CHECK(k.b_tau() == doctest::Approx(0.02).epsilon(1e-15));
    CHECK(k.a_of_t(0.0) == 0.0);
    CHECK(k.a_of_t(10.0) ==
          doctest::Approx(0.04 / 0.02 * (1.0 - std::exp(-0.2))).epsilon(1e-14));
    // long-time limit gamma_minus / b, approached monotonically
    CHECK(k.a_of_t(2000.0) == doctest::Approx(2.0).epsilon(1e-12));
    double prev = -1.0;
    for (double t : {0.1, 1.0, 10.0, 100.0}) {
        CHECK(k.a_of_t(t) > prev);
        prev = k.a_of_t(t);
    }

    // balanced rates: a_t = gamma_minus * t exactly
    EvolutionKernels kb = EvolutionKernels::from_rates(synthetic_rates(0.04, 0.04, 0.0, 0.05));
    CHECK(kb.a_of_t(7.0) == doctest::Approx(0.28).epsilon(1e-14));

    // geometric accumulation of the Gaussian exponent
    CHECK(k.f_m(0) == 0.0);
    CHECK(k.f_m(1) == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(k.f_m(3) ==
          doctest::Approx(0.05 * (1.0 - std::exp(-0.3)) / (1.0 - std::exp(-0.1)))
              .epsilon(1e-14));
    // removable singularity at vanishing damping integral
    CHECK(kb.f_m(4) == doctest::Approx(4.0 * 0.05).epsilon(1e-14));
}

TEST_CASE("recursive characteristic function") {
    CatState cat = CatState::make(2.0);
    EvolutionKernels k = EvolutionKernels::from_rates(synthetic_rates(0.06, 0.04, 0.1, 0.05));

    // no interruptions: the initial state
    for (cplx xi : {cplx(0.3, 0.4), cplx(1.0, -0.2)})
        CHECK(std::abs(recursive_qcf(xi, {0.1, 0}, cat, k) - cat_qcf(xi, cat)) <= 1e-15);

    // trace preservation at any step count
    for (long m : {0L, 1L, 7L, 300L})
        CHECK(std::abs(recursive_qcf(0.0, {0.1, m}, cat, k) - cplx(1.0, 0.0)) <= 1e-15);

    // many interruptions: Gaussian with the geometric-limit exponent
    const double f_inf = 0.05 / (1.0 - std::exp(-0.1));
    for (cplx xi : {cplx(0.5, 0.0), cplx(0.2, 0.9)}) {
        const cplx got = recursive_qcf(xi, {0.1, 2000}, cat, k);
        CHECK(std::abs(got - std::exp(-f_inf * std::norm(xi))) <= 1e-12);
    }

    CHECK_THROWS_AS(recursive_qcf(0.1, {0.1, -1}, cat, k), DomainError);
}

TEST_CASE("analytic Wigner function at t = 0") {
    CatState cat = CatState::make(2.0);
    EvolutionKernels k = EvolutionKernels::from_rates(synthetic_rates(0.06, 0.04, 0.1, 0.05));
    // origin value is the parity 2/pi of the even cat, exactly
    CHECK(analytic_wigner(0.0, 0.0, k, cat) == doctest::Approx(2.0 / M_PI).epsilon(1e-14));
    // lobe center
    const double a = cat.alpha, N = cat.norm;
    const double expect =
        2.0 * N / M_PI *
        (1.0 + std::exp(-8.0 * a * a) + 2.0 * std::exp(-2.0 * a * a));
    CHECK(analytic_wigner(cplx(a, 0.0), 0.0, k, cat) ==
          doctest::Approx(expect).epsilon(1e-13));
    // interference fringes oscillate along the imaginary axis
    CHECK(analytic_wigner(cplx(0.0, M_PI / (4.0 * a)), 0.0, k, cat) < 0.0);
}

TEST_CASE("Wigner function against the Fourier-transform oracle") {
    CatState cat = CatState::make(2.0);
    EvolutionKernels k = EvolutionKernels::from_rates(
        synthetic_rates(0.0981, 0.0979, 2e-6, 9.8e-4, 0.01));
    for (long m : {0L, 7L}) {
        ShutterSchedule sched{0.01, m};
        auto chi = [&](cplx xi) { return recursive_qcf(xi, sched, cat, k); };
        WignerField f = verify::wigner_by_fourier(chi, 12.0, 6.0, 33, 2);
        double worst = 0.0;
        for (std::size_t ir = 0; ir < f.nr; ++ir)
            for (std::size_t ii = 0; ii < f.ni; ++ii) {
                const double br = f.beta_r_min + f.h * static_cast<double>(ir);
                const double bi = f.beta_i_min + f.h * static_cast<double>(ii);
                worst = std::max(worst, std::abs(f.at(ir, ii) -
                                                 analytic_wigner({br, bi},
                                                                 sched.time(), k, cat)));
            }
        CHECK(worst <= 1e-4);
    }
}

TEST_CASE("long-time Wigner function is a centered thermal Gaussian") {
    CatState cat = CatState::make(2.0);
    EvolutionKernels k = EvolutionKernels::from_rates(synthetic_rates(0.06, 0.04, 0.1, 0.05));
    const double nbar = 0.04 / 0.02;
    const double t = 5000.0;
    CHECK(analytic_wigner(0.0, t, k, cat) ==
          doctest::Approx(2.0 / (M_PI * (2.0 * nbar + 1.0))).epsilon(1e-10));
    // no interference oscillation left along the imaginary axis
    const double w1 = analytic_wigner(cplx(0.0, 0.4), t, k, cat);
    const double w2 = analytic_wigner(cplx(0.4, 0.0), t, k, cat);
    CHECK(w1 == doctest::Approx(w2).epsilon(1e-9));
}

TEST_CASE("interference peak") {
    CatState cat = CatState::make(2.0);
    EvolutionKernels k = EvolutionKernels::from_rates(synthetic_rates(0.06, 0.04, 0.1, 0.05));

    CHECK(wigner_peak(0.0, k, cat, PeakMode::Exact) ==
          doctest::Approx(4.0 * cat.norm / M_PI).epsilon(1e-14));
    CHECK(wigner_peak(0.0, k, cat, PeakMode::Approximate) ==
          doctest::Approx(4.0 * cat.norm / M_PI).epsilon(1e-14));

    // approximate mode decays with rate 2 gamma_minus (1 + 2 alpha^2)
    const double t = 0.7;
    const double ratio = wigner_peak(t, k, cat, PeakMode::Approximate) /
                         wigner_peak(0.0, k, cat, PeakMode::Approximate);
    CHECK(ratio == doctest::Approx(std::exp(-2.0 * 0.04 * 9.0 * t)).epsilon(1e-13));

    // log form agrees with the direct ratio where no underflow occurs
    for (double tt : {0.1, 2.0, 20.0})
        CHECK(log_wigner_peak_ratio(tt, k, cat) ==
              doctest::Approx(std::log(wigner_peak(tt, k, cat, PeakMode::Exact) /
                                       wigner_peak(0.0, k, cat, PeakMode::Exact)))
                  .epsilon(1e-10));

    // normalized exact peak never increases
    double prev = 1e300;
    for (double tt = 0.0; tt <= 100.0; tt += 2.5) {
        const double lg = log_wigner_peak_ratio(tt, k, cat);
        CHECK(lg <= prev + 1e-13);
        prev = lg;
    }
}

TEST_CASE("closed-form number distribution") {
    CatState cat = CatState::make(2.0);
    EvolutionKernels k = EvolutionKernels::from_rates(synthetic_rates(0.06, 0.04, 0.1, 0.05));
    NumberDistribution p0 = cat_number_distribution(cat, 60);

    // t = 0 reproduces the initial cat, odd components exactly suppressed
    for (int n = 0; n <= 40; ++n) {
        const double p = pn_closed_form(n, 0.0, k, cat);
        if (n % 2 == 1)
            CHECK(std::abs(p) <= 1e-12);
        else
            CHECK(std::abs(p - p0.probs[n]) <= 1e-12);
    }

    const std::vector<double> times{0.0, 3.0, 12.0, 60.0};
    auto evo = pn_evolution(times, k, cat, 60);
    for (std::size_t it = 0; it < times.size(); ++it) {
        CHECK(evo[it].sum() == doctest::Approx(1.0).epsilon(1e-8));
        for (double p : evo[it].probs) CHECK(p >= -1e-12);
        // first moment follows a_t + <n>_0 e^{-b t}
        const double want = k.a_of_t(times[it]) +
                            cat.mean_photon_number() * std::exp(-k.b_tau() * times[it]);
        CHECK(evo[it].mean() == doctest::Approx(want).epsilon(1e-8));
    }

    // stationary limit: thermal distribution with mean gamma_minus / b
    const double nbar = 2.0;
    auto late = pn_evolution({800.0}, k, cat, 60);
    CHECK(late[0].mean() == doctest::Approx(nbar).epsilon(1e-6));
    for (int n = 0; n <= 10; ++n) {
        const double th = std::pow(nbar / (nbar + 1.0), n) / (nbar + 1.0);
        CHECK(late[0].probs[n] == doctest::Approx(th).epsilon(1e-6));
    }

    CHECK_THROWS_AS(pn_closed_form(-1, 0.0, k, cat), DomainError);
    CHECK_THROWS_AS(pn_evolution({1.0, 0.5}, k, cat, 10), DomainError);
}

TEST_CASE("parity contrast equals the phase-space origin value") {
    CatState cat = CatState::make(2.0);
    EvolutionKernels k = EvolutionKernels::from_rates(synthetic_rates(0.06, 0.04, 0.1, 0.05));
    for (double t : {0.0, 5.0, 25.0}) {
        NumberDistribution nd;
        nd.probs.resize(61);
        for (int n = 0; n <= 60; ++n) nd.probs[n] = pn_closed_form(n, t, k, cat);
        CHECK(nd.parity_contrast() ==
              doctest::Approx(0.5 * M_PI * analytic_wigner(0.0, t, k, cat)).epsilon(1e-8));
    }
}

TEST_CASE("Wigner lattice normalization") {
    CatState cat = CatState::make(2.0);
    EvolutionKernels k = EvolutionKernels::from_rates(synthetic_rates(0.06, 0.04, 0.1, 0.05));
    for (double t : {0.0, 8.0}) {
        WignerField f = wigner_field(t, k, cat, 257);
        CHECK(std::abs(f.riemann_sum() - 1.0) <= 1e-3);
    }
    CHECK(wigner_field(0.0, k, cat, 257).h == doctest::Approx(12.0 / 256.0));
    ShutterSchedule sched{0.25, 8};
    CHECK(sched.time() == doctest::Approx(2.0));
}
