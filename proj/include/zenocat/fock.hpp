#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace zenocat {

// Density matrix in the truncated Fock basis {|0>, ..., |n_max>}.
struct FockDensityMatrix {
    Eigen::MatrixXcd m;

    FockDensityMatrix() = default;
    explicit FockDensityMatrix(int n_max)
        : m(Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1)) {}

    int dim() const { return static_cast<int>(m.rows()); }
    int n_max() const { return dim() - 1; }

    double trace_real() const { return m.trace().real(); }
    double hermiticity_error() const;  // max |rho - rho^dagger|
    double min_eigenvalue() const;     // of the Hermitized matrix
    double purity() const;             // Re tr(rho^2)
    std::vector<double> diagonal() const;
    double max_offdiag_abs() const;

    // Symmetric-order characteristic function tr[rho D(xi)],
    // D(xi) = exp(xi a^dag - xi^* a), evaluated in the truncated basis.
    std::complex<double> qcf(std::complex<double> xi) const;
};

// Displacement operator matrix in the truncated Fock basis.
Eigen::MatrixXcd displacement_matrix(std::complex<double> xi, int n_max);

}  // namespace zenocat
