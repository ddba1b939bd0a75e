#include "zenocat/states.hpp"

#include <cmath>
#include <sstream>

#include "zenocat/errors.hpp"

namespace zenocat {

CatState CatState::make(double alpha) {
    if (!std::isfinite(alpha)) throw DomainError("CatState: alpha must be finite");
    CatState c;
    c.alpha = alpha;
    c.norm = 1.0 / (2.0 * (1.0 + std::exp(-2.0 * alpha * alpha)));
    return c;
}

double CatState::mean_photon_number() const {
    const double a2 = alpha * alpha;
    return a2 * std::tanh(a2);
}

int default_n_max(double alpha) {
    const double a = std::abs(alpha);
    return std::max(30, static_cast<int>(std::ceil(a * a + 8.0 * a + 10.0)));
}

double NumberDistribution::sum() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
}

double NumberDistribution::mean() const {
    double s = 0.0;
    for (std::size_t n = 0; n < probs.size(); ++n) s += static_cast<double>(n) * probs[n];
    return s;
}

double NumberDistribution::parity_contrast() const {
    double c = 0.0;
    for (std::size_t n = 0; n < probs.size(); ++n)
        c += (n % 2 == 0) ? probs[n] : -probs[n];
    return c;
}

std::complex<double> cat_qcf(std::complex<double> xi, const CatState& cat) {
    const double a = cat.alpha;
    const double gauss = std::exp(-0.5 * std::norm(xi));
    return 2.0 * cat.norm * gauss *
           (std::cos(2.0 * a * xi.imag()) +
            std::exp(-2.0 * a * a) * std::cosh(2.0 * a * xi.real()));
}

NumberDistribution cat_number_distribution(const CatState& cat, int n_max) {
    if (n_max < 0) throw DomainError("cat_number_distribution: n_max must be >= 0");
    const double a2 = cat.alpha * cat.alpha;
    NumberDistribution nd;
    nd.probs.assign(n_max + 1, 0.0);
    for (int n = 0; n <= n_max; n += 2) {
        const double logp = n * std::log(a2 > 0.0 ? a2 : 1.0) - std::lgamma(n + 1.0);
        nd.probs[n] = (a2 > 0.0 || n == 0)
                          ? cat.norm * 4.0 * std::exp(-a2 + (a2 > 0.0 ? logp : 0.0))
                          : 0.0;
    }
    const double tail = 1.0 - nd.sum();
    if (tail > 1e-10) {
        std::ostringstream os;
        os << "cat_number_distribution: truncation tail " << tail << " exceeds 1e-10 at n_max="
           << n_max << " (alpha=" << cat.alpha << ")";
        throw TruncationError(os.str());
    }
    return nd;
}

FockDensityMatrix cat_density_matrix(const CatState& cat, int n_max) {
    if (n_max < 0) throw DomainError("cat_density_matrix: n_max must be >= 0");
    const double a = cat.alpha;
    // components of |alpha> + |-alpha>: 2 c_n for even n, 0 for odd
    Eigen::VectorXd w(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        if (n % 2 == 1 || (a == 0.0 && n > 0)) {
            w(n) = 0.0;
            continue;
        }
        const double logc = -0.5 * a * a + (n > 0 ? n * std::log(std::abs(a)) : 0.0) -
                            0.5 * std::lgamma(n + 1.0);
        w(n) = 2.0 * std::exp(logc);
    }
    FockDensityMatrix rho(n_max);
    rho.m = cat.norm * (w * w.transpose()).cast<std::complex<double>>();
    const double tail = 1.0 - rho.trace_real();
    if (tail > 1e-10) {
        std::ostringstream os;
        os << "cat_density_matrix: truncation tail " << tail << " exceeds 1e-10 at n_max="
           << n_max;
        throw TruncationError(os.str());
    }
    return rho;
}

}  // namespace zenocat
