#include "zenocat/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "zenocat/errors.hpp"
#include "zenocat/quadrature.hpp"

namespace zenocat {

namespace {

using quad::sinc;

// Frequency cutoff for a kernel oscillating like sin(w t): beyond Omega the
// integrand envelope is monotone decreasing and the neglected tail is
// O(1/(t*Omega)^2) relative, so tail_factor ~ 5e3 keeps it below 1e-7.
double cutoff(double t, const ReservoirSpec& spec, const CoeffOptions& opt) {
    const double floor_ = 2.0 * spec.omega_c + spec.omega_0 + 1.0;
    return std::max(floor_, spec.omega_0 + opt.tail_factor / t);
}

// Breakpoints covering the spectral structure plus an oscillation ladder with
// at most ~4 periods per initial segment (capped at 400 ladder segments).
std::vector<double> breakpoints(double lo, double hi, double t_osc,
                                std::initializer_list<double> features) {
    std::vector<double> pts{lo, hi};
    for (double f : features)
        if (f > lo && f < hi) pts.push_back(f);
    if (t_osc > 0.0) {
        const double period = 2.0 * M_PI / t_osc;
        const double span = hi - lo;
        double step = 4.0 * period;  // GK15 error estimates stay honest at <= ~4 periods
        if (span / step > 20000.0) step = span / 20000.0;
        if (step < span) {
            for (double x = lo + step; x < hi; x += step) pts.push_back(x);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

quad::Options quad_opts(const CoeffOptions& opt, double abs_scale) {
    quad::Options q;
    q.abs_tol = std::max(opt.abs_tol, 1e-16 * abs_scale);
    q.rel_tol = opt.rel_tol;
    q.max_intervals = 60000;
    return q;
}

}  // namespace

double delta_of_t(double t, const ReservoirSpec& spec, const CoeffOptions& opt) {
    if (t < 0.0) throw DomainError("delta_of_t: t must be >= 0");
    if (t == 0.0) return 0.0;
    spec.validate();
    const double w0 = spec.omega_0;
    const double Omega = cutoff(t, spec, opt);
    auto f = [&](double w) {
        const double occ = (w == 0.0) ? 0.0 : thermal_occupation(w, spec) + 0.5;
        return ohmic_density(w, spec) * occ *
               (sinc((w - w0) * t) + sinc((w + w0) * t));
    };
    auto pts = breakpoints(0.0, Omega, t,
                           {0.5 * w0, w0, 1.5 * w0, spec.omega_c, 2.0 * spec.omega_c});
    auto res = quad::integrate_segments(f, pts, quad_opts(opt, 1.0));
    return spec.g * spec.g * t * res.value;
}

double gamma_of_t(double t, const ReservoirSpec& spec, const CoeffOptions& opt) {
    if (t < 0.0) throw DomainError("gamma_of_t: t must be >= 0");
    if (t == 0.0) return 0.0;
    spec.validate();
    const double w0 = spec.omega_0;
    const double Omega = cutoff(t, spec, opt);
    auto f = [&](double w) {
        return ohmic_density(w, spec) *
               (sinc((w - w0) * t) - sinc((w + w0) * t));
    };
    auto pts = breakpoints(0.0, Omega, t,
                           {0.5 * w0, w0, 1.5 * w0, spec.omega_c, 2.0 * spec.omega_c});
    auto res = quad::integrate_segments(f, pts, quad_opts(opt, 1.0));
    return spec.g * spec.g * 0.5 * t * res.value;
}

double big_gamma_of_t(double t, const ReservoirSpec& spec, const CoeffOptions& opt) {
    if (t < 0.0) throw DomainError("big_gamma_of_t: t must be >= 0");
    if (t == 0.0) return 0.0;
    spec.validate();
    const double w0 = spec.omega_0;
    const double Omega = cutoff(t, spec, opt);
    auto f = [&](double w) {
        return ohmic_density(w, spec) * (quad::one_minus_cos_over_sq(w - w0, t) -
                                         quad::one_minus_cos_over_sq(w + w0, t));
    };
    auto pts = breakpoints(0.0, Omega, t,
                           {0.5 * w0, w0, 1.5 * w0, spec.omega_c, 2.0 * spec.omega_c});
    auto res = quad::integrate_segments(f, pts, quad_opts(opt, 1.0));
    return spec.g * spec.g * res.value;
}

CoefficientCurve CoefficientCurve::tabulate(const ReservoirSpec& spec, double t_max,
                                            std::size_t n_points,
                                            const CoeffOptions& opt) {
    if (n_points < 2) throw DomainError("CoefficientCurve: need >= 2 points");
    if (!(t_max > 0.0)) throw DomainError("CoefficientCurve: t_max must be > 0");
    CoefficientCurve c;
    c.times.resize(n_points);
    c.delta.resize(n_points);
    c.gamma.resize(n_points);
    const double dt = t_max / static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double t = dt * static_cast<double>(i);
        c.times[i] = t;
        c.delta[i] = delta_of_t(t, spec, opt);
        c.gamma[i] = gamma_of_t(t, spec, opt);
    }
    return c;
}

double markov_gamma_scale(const ReservoirSpec& spec) {
    const double r = spec.r();
    return 2.0 * spec.g * spec.g * r * r / (r * r + 1.0) * spec.omega_0;
}

RateSet markov_rates(const ReservoirSpec& spec) {
    spec.validate();
    const double G = markov_gamma_scale(spec);
    const double N = spec.n_omega0();
    RateSet rs;
    rs.tau = std::numeric_limits<double>::infinity();
    rs.gamma_plus = rs.markov_plus = G * (N + 1.0);
    rs.gamma_minus = rs.markov_minus = G * N;
    return rs;
}

RateSet measured_rates(double tau, const ReservoirSpec& spec, const CoeffOptions& opt) {
    if (!(tau > 0.0)) throw DomainError("measured_rates: tau must be > 0");
    spec.validate();
    const double w0 = spec.omega_0;
    const double Omega = cutoff(tau, spec, opt);

    auto rate = [&](double sign) {  // +1 -> gamma_plus, -1 -> gamma_minus
        auto f = [&](double w) {
            const double s = sinc((w - sign * w0) * tau * 0.5);
            return kappa_beta(w, spec) * s * s;
        };
        auto pts = breakpoints(-Omega, Omega, tau,
                               {-2.0 * spec.omega_c, -spec.omega_c, -1.5 * w0, -w0,
                                -0.5 * w0, 0.0, 0.5 * w0, w0, 1.5 * w0, spec.omega_c,
                                2.0 * spec.omega_c});
        auto res = quad::integrate_segments(f, pts, quad_opts(opt, 1.0));
        return 0.5 * spec.g * spec.g * tau * res.value;
    };

    RateSet rs = markov_rates(spec);
    rs.tau = tau;
    rs.gamma_plus = rate(+1.0);
    rs.gamma_minus = rate(-1.0);
    rs.big_gamma_tau = std::numeric_limits<double>::quiet_NaN();
    rs.delta_gamma_tau = std::numeric_limits<double>::quiet_NaN();
    if (rs.gamma_plus < 0.0 || rs.gamma_minus < 0.0) {
        std::ostringstream os;
        os << "measured_rates: negative rate (gp=" << rs.gamma_plus
           << ", gm=" << rs.gamma_minus << ") at tau=" << tau;
        throw NumericalError(os.str());
    }
    return rs;
}

RateSet rates_by_time_average(double tau, const ReservoirSpec& spec,
                              const CoeffOptions& opt) {
    if (!(tau > 0.0)) throw DomainError("rates_by_time_average: tau must be > 0");
    spec.validate();
    quad::Options q;
    q.rel_tol = std::max(1e-9, opt.rel_tol);
    q.abs_tol = 1e-15;
    q.max_intervals = 3000;
    auto mean_of = [&](auto&& fn) {
        auto res = quad::integrate([&](double t) { return fn(t); }, 0.0, tau, q);
        return res.value / tau;
    };
    const double mean_delta = mean_of([&](double t) { return delta_of_t(t, spec, opt); });
    const double mean_gamma = mean_of([&](double t) { return gamma_of_t(t, spec, opt); });

    RateSet rs = markov_rates(spec);
    rs.tau = tau;
    rs.gamma_plus = mean_delta + mean_gamma;
    rs.gamma_minus = mean_delta - mean_gamma;
    rs.big_gamma_tau = std::numeric_limits<double>::quiet_NaN();
    rs.delta_gamma_tau = std::numeric_limits<double>::quiet_NaN();
    return rs;
}

ShutterIntegrals shutter_integrals(double tau, const ReservoirSpec& spec,
                                   const CoeffOptions& opt) {
    if (!(tau > 0.0)) throw DomainError("shutter_integrals: tau must be > 0");
    spec.validate();
    quad::Options q;
    q.rel_tol = std::max(1e-9, opt.rel_tol);
    q.abs_tol = 1e-15;
    q.max_intervals = 3000;

    ShutterIntegrals si;
    auto rg = quad::integrate([&](double t) { return gamma_of_t(t, spec, opt); },
                              0.0, tau, q);
    si.big_gamma = 2.0 * rg.value;

    // weight uses the single-quadrature running integral for BigGamma(t)
    const double bg_tau = big_gamma_of_t(tau, spec, opt);
    auto rd = quad::integrate(
        [&](double t) {
            return std::exp(big_gamma_of_t(t, spec, opt)) * delta_of_t(t, spec, opt);
        },
        0.0, tau, q);
    si.delta_gamma = std::exp(-bg_tau) * rd.value;
    return si;
}

RateSet full_rate_set(double tau, const ReservoirSpec& spec, const CoeffOptions& opt) {
    RateSet rs = measured_rates(tau, spec, opt);
    ShutterIntegrals si = shutter_integrals(tau, spec, opt);
    rs.big_gamma_tau = si.big_gamma;
    rs.delta_gamma_tau = si.delta_gamma;
    return rs;
}

double analytic_gamma_minus(double tau, const ReservoirSpec& spec) {
    if (!(tau > 0.0)) throw DomainError("analytic_gamma_minus: tau must be > 0");
    spec.validate();
    if (spec.spectral_kind != SpectralKind::OhmicLorentzian)
        throw DomainError("analytic_gamma_minus: requires the Ohmic-Lorentzian spectrum");
    if (spec.thermal_kind != ThermalKind::ConstantN)
        throw DomainError(
            "analytic_gamma_minus: closed form assumes a flat occupation scale; "
            "use the ConstantN thermal model");
    const double r = spec.r();
    const double wc = spec.omega_c, w0 = spec.omega_0;
    const double G = markov_gamma_scale(spec);
    const double ewct = std::exp(-wc * tau);
    const double braces = wc * tau +
                          (1.0 - r * r) / (1.0 + r * r) * (1.0 - ewct * std::cos(w0 * tau)) -
                          2.0 * r / (1.0 + r * r) * ewct * std::sin(w0 * tau);
    return G * spec.n0 / (tau * wc) * braces;
}

}  // namespace zenocat
