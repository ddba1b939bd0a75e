#include <doctest.h>

#include <cmath>

#include "zenocat/errors.hpp"
#include "zenocat/reservoir.hpp"

using namespace zenocat;

TEST_CASE("ohmic density closed-form points") {
    ReservoirSpec s = ReservoirSpec::constant_n(1.0, 0.1, 1.0);
    CHECK(ohmic_density(0.0, s) == 0.0);
    CHECK(ohmic_density(1.0, s) == doctest::Approx(1.0 / M_PI).epsilon(1e-15));
    CHECK(ohmic_density(10.0, s) ==
          doctest::Approx(20.0 / (101.0 * M_PI)).epsilon(1e-15));

    ReservoirSpec s10 = ReservoirSpec::constant_n(10.0, 0.1, 1.0);
    CHECK(ohmic_density(10.0, s10) == doctest::Approx(10.0 / M_PI).epsilon(1e-15));

    CHECK_THROWS_AS(ohmic_density(-0.5, s), DomainError);
}

TEST_CASE("ohmic density is linear near zero with slope 2/pi") {
    ReservoirSpec s = ReservoirSpec::constant_n(3.0, 0.1, 1.0);
    for (double w : {1e-8, 1e-6, 1e-4})
        CHECK(ohmic_density(w, s) / w == doctest::Approx(2.0 / M_PI).epsilon(1e-7));
}

TEST_CASE("thermal occupation") {
    ReservoirSpec cold = ReservoirSpec::bose_einstein(1.0, 0.1, 1e-6);
    CHECK(thermal_occupation(1.0, cold) <= 1e-6);

    // occupation equals one when omega/(theta*omega0) = ln 2
    ReservoirSpec s = ReservoirSpec::bose_einstein(1.0, 0.1, 1.0);
    CHECK(thermal_occupation(std::log(2.0), s) == doctest::Approx(1.0).epsilon(1e-14));

    ReservoirSpec flat = ReservoirSpec::constant_n(1.0, 0.1, 100.0);
    CHECK(thermal_occupation(0.37, flat) == 100.0);
    CHECK(thermal_occupation(42.0, flat) == 100.0);

    CHECK_THROWS_AS(thermal_occupation(0.0, s), DomainError);
}

TEST_CASE("thermal spectral density") {
    ReservoirSpec cold = ReservoirSpec::bose_einstein(2.0, 0.1, 1e-7);
    // positive side reduces to spontaneous emission
    CHECK(kappa_beta(1.3, cold) ==
          doctest::Approx(ohmic_density(1.3, cold)).epsilon(1e-12));
    // negative side vanishes with the occupation
    CHECK(kappa_beta(-1.3, cold) <= 1e-12);
    CHECK(kappa_beta(0.0, cold) == 0.0);

    ReservoirSpec flat = ReservoirSpec::constant_n(2.0, 0.1, 7.0);
    CHECK(kappa_beta(-1.0, flat) ==
          doctest::Approx(ohmic_density(1.0, flat) * 7.0).epsilon(1e-14));
    CHECK(kappa_beta(1.0, flat) ==
          doctest::Approx(ohmic_density(1.0, flat) * 8.0).epsilon(1e-14));
}

TEST_CASE("detailed balance for Bose-Einstein occupations") {
    ReservoirSpec s = ReservoirSpec::bose_einstein(1.0, 0.1, 2.5);
    for (double w : {0.3, 0.7, 1.0, 1.9, 3.4}) {
        const double ratio = kappa_beta(w, s) / kappa_beta(-w, s);
        CHECK(ratio == doctest::Approx(std::exp(w / 2.5)).epsilon(1e-12));
    }
}

TEST_CASE("kappa_beta is nonnegative everywhere") {
    for (const auto& s : {ReservoirSpec::bose_einstein(0.5, 0.2, 3.0),
                          ReservoirSpec::constant_n(5.0, 0.05, 0.0),
                          ReservoirSpec::constant_n(5.0, 0.05, 50.0)}) {
        for (double w = -30.0; w <= 30.0; w += 0.37) CHECK(kappa_beta(w, s) >= 0.0);
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(ReservoirSpec::constant_n(-1.0, 0.1, 1.0), DomainError);
    CHECK_THROWS_AS(ReservoirSpec::constant_n(1.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(ReservoirSpec::constant_n(1.0, 0.1, -2.0), DomainError);
    CHECK_THROWS_AS(ReservoirSpec::bose_einstein(1.0, 0.1, 0.0), DomainError);
    ReservoirSpec s = ReservoirSpec::bose_einstein(3.0, 0.1, 2.0, 2.0);
    CHECK(s.r() == doctest::Approx(1.5));
    CHECK(s.n_omega0() == doctest::Approx(1.0 / std::expm1(1.0 / 2.0)));
}
