#include "zenocat/fock.hpp"

#include <cmath>
#include <vector>

namespace zenocat {

double FockDensityMatrix::hermiticity_error() const {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double FockDensityMatrix::min_eigenvalue() const {
    Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double FockDensityMatrix::purity() const { return (m * m).trace().real(); }

std::vector<double> FockDensityMatrix::diagonal() const {
    std::vector<double> d(dim());
    for (int i = 0; i < dim(); ++i) d[i] = m(i, i).real();
    return d;
}

double FockDensityMatrix::max_offdiag_abs() const {
    double v = 0.0;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (i != j) v = std::max(v, std::abs(m(i, j)));
    return v;
}

std::complex<double> FockDensityMatrix::qcf(std::complex<double> xi) const {
    Eigen::MatrixXcd D = displacement_matrix(xi, n_max());
    return (m * D).trace();
}

Eigen::MatrixXcd displacement_matrix(std::complex<double> xi, int n_max) {
    // <n+k|D(xi)|n> = sqrt(n!/(n+k)!) xi^k e^{-|xi|^2/2} L_n^{(k)}(|xi|^2)
    // <n|D(xi)|n+k> = sqrt(n!/(n+k)!) (-xi^*)^k e^{-|xi|^2/2} L_n^{(k)}(|xi|^2)
    const int d = n_max + 1;
    const double x = std::norm(xi);
    const double pref = std::exp(-0.5 * x);
    Eigen::MatrixXcd D(d, d);
    std::vector<double> L(d);
    for (int k = 0; k <= n_max; ++k) {
        const int count = d - k;  // n = 0 .. count-1
        L[0] = 1.0;
        if (count > 1) L[1] = 1.0 + k - x;
        for (int n = 1; n + 1 < count; ++n)
            L[n + 1] = ((2.0 * n + k + 1.0 - x) * L[n] - (n + k) * L[n - 1]) / (n + 1.0);

        std::complex<double> xik = 1.0, mxick = 1.0;
        for (int p = 0; p < k; ++p) {
            xik *= xi;
            mxick *= -std::conj(xi);
        }
        double ratio = 1.0;  // sqrt(0!/k!)
        for (int p = 1; p <= k; ++p) ratio /= std::sqrt(static_cast<double>(p));
        for (int n = 0; n < count; ++n) {
            const std::complex<double> common = ratio * pref * L[n];
            D(n + k, n) = common * xik;
            if (k > 0) D(n, n + k) = common * mxick;
            ratio *= std::sqrt((n + 1.0) / (n + 1.0 + k));
        }
    }
    return D;
}

}  // namespace zenocat
