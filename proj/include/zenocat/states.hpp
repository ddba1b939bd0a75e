#pragma once

#include <complex>
#include <vector>

#include "zenocat/fock.hpp"

namespace zenocat {

// Even coherent superposition (|alpha> + |-alpha>)/sqrt(1/norm), alpha real.
// norm is the density-matrix prefactor: rho = norm (|a>+|-a>)(<a|+<-a|),
// with 1/norm = 2 [1 + exp(-2 alpha^2)].
struct CatState {
    double alpha = 0.0;
    double norm = 0.25;

    static CatState make(double alpha);

    // Mean photon number alpha^2 tanh(alpha^2).
    double mean_photon_number() const;
};

// Truncation size heuristic: max(30, ceil(alpha^2 + 8 alpha + 10)).
int default_n_max(double alpha);

// Truncated photon-number distribution.
struct NumberDistribution {
    std::vector<double> probs;

    int n_max() const { return static_cast<int>(probs.size()) - 1; }
    double sum() const;
    double mean() const;
    // sum over even n minus sum over odd n
    double parity_contrast() const;
};

// Symmetric-order characteristic function of the cat state:
// 2 norm e^{-|xi|^2/2} [cos(2 alpha Im xi) + e^{-2 alpha^2} cosh(2 alpha Re xi)].
std::complex<double> cat_qcf(std::complex<double> xi, const CatState& cat);

// P_n of the cat: zero for odd n, norm * 4 e^{-a^2} a^{2n}/n! for even n.
// Throws TruncationError if the tail beyond n_max exceeds 1e-10.
NumberDistribution cat_number_distribution(const CatState& cat, int n_max);

// rho = norm (|a>+|-a>)(<a|+<-a|) truncated to the Fock basis.
FockDensityMatrix cat_density_matrix(const CatState& cat, int n_max);

}  // namespace zenocat
