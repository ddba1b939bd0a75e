#include <doctest.h>

#include <cmath>

#include "zenocat/errors.hpp"
#include "zenocat/quadrature.hpp"

using namespace zenocat;

TEST_CASE("adaptive quadrature on known integrals") {
    auto r = quad::integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));

    // Lorentzian: int_0^10 1/(1+x^2) = atan(10)
    r = quad::integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 10.0);
    CHECK(r.value == doctest::Approx(std::atan(10.0)).epsilon(1e-12));

    // peaked Gaussian placed off-center
    r = quad::integrate([](double x) { return std::exp(-100.0 * (x - 3.0) * (x - 3.0)); },
                        0.0, 20.0);
    CHECK(r.value == doctest::Approx(std::sqrt(M_PI) / 10.0).epsilon(1e-10));
}

TEST_CASE("segmented quadrature handles oscillatory stretches") {
    // int_0^{40 pi} sin(x)/x dx = Si(40 pi); reference value from the
    // slowly-converging alternating series of half-period integrals
    std::vector<double> pts;
    for (int k = 0; k <= 40; ++k) pts.push_back(M_PI * k);
    double reference = 0.0;
    for (int k = 0; k < 40; ++k)
        reference += quad::integrate([](double x) { return quad::sinc(x); },
                                     M_PI * k, M_PI * (k + 1))
                         .value;
    auto r = quad::integrate_segments([](double x) { return quad::sinc(x); },
                                      {0.0, 30.0, 70.0, 40.0 * M_PI});
    CHECK(r.value == doctest::Approx(reference).epsilon(1e-10));
}

TEST_CASE("quadrature error reporting") {
    quad::Options opt;
    opt.rel_tol = 1e-14;
    opt.abs_tol = 0.0;
    opt.max_intervals = 4;  // impossible budget
    opt.throw_on_failure = true;
    CHECK_THROWS_AS(quad::integrate([](double x) { return std::sin(50.0 * x) / (1e-3 + x); },
                                    0.0, 50.0, opt),
                    NumericalError);
}

TEST_CASE("sinc and 1-cos helpers near zero") {
    CHECK(quad::sinc(0.0) == 1.0);
    CHECK(quad::sinc(1e-9) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(quad::sinc(2.0) == doctest::Approx(std::sin(2.0) / 2.0).epsilon(1e-15));
    // (1-cos(xt))/x^2 at x -> 0 equals t^2/2
    CHECK(quad::one_minus_cos_over_sq(0.0, 3.0) == doctest::Approx(4.5).epsilon(1e-14));
    CHECK(quad::one_minus_cos_over_sq(1e-9, 3.0) == doctest::Approx(4.5).epsilon(1e-12));
    CHECK(quad::one_minus_cos_over_sq(0.7, 3.0) ==
          doctest::Approx((1.0 - std::cos(2.1)) / 0.49).epsilon(1e-13));
}
