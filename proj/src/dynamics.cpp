#include "zenocat/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zenocat/errors.hpp"

namespace zenocat {

namespace {

// (1 - e^{-x}) / x with the x -> 0 limit.
double expm1_ratio(double x) {
    if (std::abs(x) < 1e-12) return 1.0 - 0.5 * x;
    return -std::expm1(-x) / x;
}

}  // namespace

double EvolutionKernels::a_of_t(double t) const {
    const double b = b_tau();
    return rates.gamma_minus * t * expm1_ratio(b * t);
}

double EvolutionKernels::f_m(long m) const {
    if (m < 0) throw DomainError("EvolutionKernels::f_m: m must be >= 0");
    if (m == 0) return 0.0;
    const double bg = rates.big_gamma_tau;
    const double dg = rates.delta_gamma_tau;
    if (std::isnan(bg) || std::isnan(dg))
        throw DomainError("EvolutionKernels::f_m: interruption integrals not filled");
    const double md = static_cast<double>(m);
    // dg * (1-e^{-m bg})/(1-e^{-bg}) = dg * m * ratio(m bg)/ratio(bg)
    return dg * md * expm1_ratio(md * bg) / expm1_ratio(bg);
}

EvolutionKernels EvolutionKernels::shuttered(double tau, const ReservoirSpec& spec,
                                             const CoeffOptions& opt) {
    EvolutionKernels k;
    k.rates = full_rate_set(tau, spec, opt);
    return k;
}

EvolutionKernels EvolutionKernels::markov(const ReservoirSpec& spec) {
    EvolutionKernels k;
    k.rates = markov_rates(spec);
    return k;
}

EvolutionKernels EvolutionKernels::from_rates(const RateSet& rates) {
    EvolutionKernels k;
    k.rates = rates;
    return k;
}

std::complex<double> recursive_qcf(std::complex<double> xi, const ShutterSchedule& sched,
                                   const CatState& cat, const EvolutionKernels& kernels) {
    if (sched.m < 0) throw DomainError("recursive_qcf: m must be >= 0");
    if (sched.m == 0) return cat_qcf(xi, cat);
    const double bg = kernels.rates.big_gamma_tau;
    const double shrink = std::exp(-0.5 * static_cast<double>(sched.m) * bg);
    return std::exp(-kernels.f_m(sched.m) * std::norm(xi)) * cat_qcf(shrink * xi, cat);
}

std::complex<double> recursive_qcf(std::complex<double> xi, const ShutterSchedule& sched,
                                   const CatState& cat, const ReservoirSpec& spec) {
    return recursive_qcf(xi, sched, cat, EvolutionKernels::shuttered(sched.tau, spec));
}

double analytic_wigner(std::complex<double> beta, double t,
                       const EvolutionKernels& kernels, const CatState& cat) {
    if (t < 0.0) throw DomainError("analytic_wigner: t must be >= 0");
    const double a = kernels.a_of_t(t);
    const double s = 2.0 * a + 1.0;
    const double u = std::exp(-0.5 * kernels.b_tau() * t);  // e^{-b t/2}
    const double br = beta.real(), bi = beta.imag();
    const double al = cat.alpha;
    const double amp = 2.0 * cat.norm / (M_PI * s);

    const double lobe_i = std::exp(-2.0 * bi * bi / s);
    const double wp = amp * lobe_i * std::exp(-2.0 * (br - u * al) * (br - u * al) / s);
    const double wm = amp * lobe_i * std::exp(-2.0 * (br + u * al) * (br + u * al) / s);

    const double wi = 2.0 * amp * std::exp(-2.0 * std::norm(beta) / s) *
                      std::exp(-2.0 * (1.0 - u * u / s) * al * al) *
                      std::cos(4.0 * u * al * bi / s);
    return wp + wm + wi;
}

double wigner_peak(double t, const EvolutionKernels& kernels, const CatState& cat,
                   PeakMode mode) {
    if (t < 0.0) throw DomainError("wigner_peak: t must be >= 0");
    const double al = cat.alpha;
    if (mode == PeakMode::Approximate) {
        return 4.0 * cat.norm / M_PI *
               std::exp(-2.0 * kernels.rates.gamma_minus * (1.0 + 2.0 * al * al) * t);
    }
    const double a = kernels.a_of_t(t);
    const double s = 2.0 * a + 1.0;
    const double u2 = std::exp(-kernels.b_tau() * t);
    return 4.0 * cat.norm / (M_PI * s) * std::exp(-2.0 * (1.0 - u2 / s) * al * al);
}

double log_wigner_peak_ratio(double t, const EvolutionKernels& kernels,
                             const CatState& cat) {
    if (t < 0.0) throw DomainError("log_wigner_peak_ratio: t must be >= 0");
    const double a = kernels.a_of_t(t);
    const double s = 2.0 * a + 1.0;
    const double u2 = std::exp(-kernels.b_tau() * t);
    const double al2 = cat.alpha * cat.alpha;
    return -std::log(s) - 2.0 * al2 * (1.0 - u2 / s);
}

double pn_closed_form(int n, double t, const EvolutionKernels& kernels,
                      const CatState& cat) {
    if (n < 0) throw DomainError("pn_closed_form: n must be >= 0");
    if (t < 0.0) throw DomainError("pn_closed_form: t must be >= 0");
    const double a = kernels.a_of_t(t);
    const double u = std::exp(-kernels.b_tau() * t);  // e^{-b t}
    const double al2 = cat.alpha * cat.alpha;
    const double A = a / (a + 1.0);
    const double B = al2 * u / ((a + 1.0) * (a + 1.0));
    const double X = (1.0 - u / (a + 1.0)) * al2;

    const double logA = (A > 0.0) ? std::log(A) : 0.0;
    const double logB = (B > 0.0) ? std::log(B) : 0.0;
    std::vector<double> terms;
    terms.reserve(n + 1);
    for (int j = 0; j <= n; ++j) {
        if (A == 0.0 && j > 0) continue;
        if (B == 0.0 && j < n) continue;
        const double logcoef = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) -
                               2.0 * std::lgamma(n - j + 1.0);
        const double logw = logcoef + j * logA + (n - j) * logB;
        // brace e^X + (-1)^{n-j} e^{-X}: 2cosh(X) or 2sinh(X), both nonnegative
        const double brace =
            ((n - j) % 2 == 0) ? 2.0 * std::cosh(X) : 2.0 * std::sinh(X);
        terms.push_back(std::exp(logw) * brace);
    }
    std::sort(terms.begin(), terms.end());
    double ssum = 0.0;
    for (double v : terms) ssum += v;
    const double p = 2.0 * cat.norm * std::exp(-al2) / (a + 1.0) * ssum;
    if (p < -1e-12) {
        std::ostringstream os;
        os << "pn_closed_form: negative probability " << p << " at n=" << n << " t=" << t;
        throw NumericalError(os.str());
    }
    return std::max(p, 0.0);
}

std::vector<NumberDistribution> pn_evolution(const std::vector<double>& times,
                                             const EvolutionKernels& kernels,
                                             const CatState& cat, int n_max) {
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] < times[i - 1])
            throw DomainError("pn_evolution: times must be ascending");
    std::vector<NumberDistribution> out;
    out.reserve(times.size());
    for (double t : times) {
        NumberDistribution nd;
        nd.probs.resize(n_max + 1);
        for (int n = 0; n <= n_max; ++n) nd.probs[n] = pn_closed_form(n, t, kernels, cat);
        out.push_back(std::move(nd));
    }
    return out;
}

double WignerField::riemann_sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s * h * h;
}

WignerField wigner_field(double t, const EvolutionKernels& kernels, const CatState& cat,
                         std::size_t n_per_axis) {
    if (n_per_axis < 2) throw DomainError("wigner_field: need >= 2 points per axis");
    const double extent = 4.0 + std::abs(cat.alpha);
    WignerField f;
    f.nr = f.ni = n_per_axis;
    f.beta_r_min = -extent;
    f.beta_i_min = -extent;
    f.h = 2.0 * extent / static_cast<double>(n_per_axis - 1);
    f.values.resize(f.nr * f.ni);
    for (std::size_t ir = 0; ir < f.nr; ++ir) {
        const double br = f.beta_r_min + f.h * static_cast<double>(ir);
        for (std::size_t ii = 0; ii < f.ni; ++ii) {
            const double bi = f.beta_i_min + f.h * static_cast<double>(ii);
            f.at(ir, ii) = analytic_wigner({br, bi}, t, kernels, cat);
        }
    }
    return f;
}

}  // namespace zenocat
