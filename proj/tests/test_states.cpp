#include <doctest.h>

#include <cmath>
#include <complex>

#include "zenocat/errors.hpp"
#include "zenocat/states.hpp"

using namespace zenocat;
using cplx = std::complex<double>;

TEST_CASE("cat normalization constant") {
    CatState c = CatState::make(2.0);
    CHECK(1.0 / c.norm == doctest::Approx(2.0 * (1.0 + std::exp(-8.0))).epsilon(1e-15));
    // alpha = 0 degenerates to the vacuum
    CatState v = CatState::make(0.0);
    CHECK(v.norm == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(default_n_max(2.0) == 30);
    CHECK(default_n_max(0.0) == 30);
    CHECK(default_n_max(5.0) >= 75);
}

TEST_CASE("cat characteristic function") {
    CatState c = CatState::make(2.0);
    CHECK(cat_qcf(0.0, c) == cplx(1.0, 0.0));

    // degenerate cat equals the vacuum characteristic function
    CatState v = CatState::make(0.0);
    for (cplx xi : {cplx(0.4, 0.1), cplx(0.0, 1.2)})
        CHECK(std::abs(cat_qcf(xi, v) - std::exp(-0.5 * std::norm(xi))) <= 1e-14);

    // conjugation symmetry of a Hermitian state
    for (cplx xi : {cplx(0.7, -0.3), cplx(1.1, 0.9), cplx(0.0, 2.0)})
        CHECK(std::abs(cat_qcf(xi, c) - std::conj(cat_qcf(-xi, c))) <= 1e-14);

    // against the truncated-basis trace oracle
    FockDensityMatrix rho = cat_density_matrix(c, 45);
    for (cplx xi : {cplx(0.3, 0.2), cplx(0.0, 1.5), cplx(2.0, 0.0), cplx(0.7, -1.1)})
        CHECK(std::abs(cat_qcf(xi, c) - rho.qcf(xi)) <= 1e-9);
}

TEST_CASE("cat number distribution") {
    CatState c = CatState::make(2.0);
    NumberDistribution nd = cat_number_distribution(c, 30);
    for (int n = 1; n <= 29; n += 2) CHECK(nd.probs[n] == 0.0);
    CHECK(nd.sum() == doctest::Approx(1.0).epsilon(1e-10));
    for (double p : nd.probs) CHECK(p >= 0.0);
    // frozen from norm * 4 e^{-4} * 4^n / n! at n = 0
    CHECK(nd.probs[0] == doctest::Approx(c.norm * 4.0 * std::exp(-4.0)).epsilon(1e-14));
    CHECK(nd.mean() == doctest::Approx(4.0 * std::tanh(4.0)).epsilon(1e-12));
    CHECK(nd.parity_contrast() == doctest::Approx(1.0).epsilon(1e-12));

    NumberDistribution vac = cat_number_distribution(CatState::make(0.0), 5);
    CHECK(vac.probs[0] == doctest::Approx(1.0).epsilon(1e-15));
    for (int n = 1; n <= 5; ++n) CHECK(vac.probs[n] == 0.0);

    // insufficient truncation is reported
    CHECK_THROWS_AS(cat_number_distribution(CatState::make(3.0), 12), TruncationError);
}

TEST_CASE("cat density matrix") {
    CatState c = CatState::make(2.0);
    FockDensityMatrix rho = cat_density_matrix(c, 32);
    NumberDistribution nd = cat_number_distribution(c, 32);
    const auto diag = rho.diagonal();
    for (int n = 0; n <= 32; ++n) CHECK(std::abs(diag[n] - nd.probs[n]) <= 1e-12);
    CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(rho.hermiticity_error() <= 1e-12);
    CHECK(rho.min_eigenvalue() >= -1e-10);
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
    // parity selection: elements mixing even and odd levels vanish
    for (int i = 0; i <= 32; ++i)
        for (int j = 0; j <= 32; ++j)
            if ((i + j) % 2 == 1) CHECK(std::abs(rho.m(i, j)) == 0.0);
}

TEST_CASE("mean photon number from characteristic-function curvature") {
    // -(d^2/dxi dxi* + 1/2) chi at xi = 0 by central differences, radial average
    CatState c = CatState::make(2.0);
    const double h = 1e-4;
    const cplx chi0 = cat_qcf(0.0, c);
    const double lap_re = (cat_qcf(cplx(h, 0.0), c) + cat_qcf(cplx(-h, 0.0), c) -
                           2.0 * chi0).real() / (h * h);
    const double lap_im = (cat_qcf(cplx(0.0, h), c) + cat_qcf(cplx(0.0, -h), c) -
                           2.0 * chi0).real() / (h * h);
    // d^2/dxi dxi* = (1/4)(d^2/dx^2 + d^2/dy^2)
    const double mean = -(0.25 * (lap_re + lap_im) + 0.5);
    NumberDistribution nd = cat_number_distribution(c, 30);
    CHECK(mean == doctest::Approx(nd.mean()).epsilon(1e-6));
}

TEST_CASE("displacement matrix is unitary on the safe subblock") {
    Eigen::MatrixXcd D = displacement_matrix(cplx(0.6, -0.4), 40);
    Eigen::MatrixXcd I = D.adjoint() * D;
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            const double want = (i == j) ? 1.0 : 0.0;
            CHECK(std::abs(I(i, j) - want) <= 1e-10);
        }
}
