#include "zenocat/reservoir.hpp"

#include <cmath>
#include <sstream>

#include "zenocat/errors.hpp"

namespace zenocat {

double ReservoirSpec::n_omega0() const {
    return thermal_occupation(omega_0, *this);
}

void ReservoirSpec::validate() const {
    if (!(omega_c > 0.0) || !std::isfinite(omega_c))
        throw DomainError("ReservoirSpec: omega_c must be positive and finite");
    if (!(omega_0 > 0.0) || !std::isfinite(omega_0))
        throw DomainError("ReservoirSpec: omega_0 must be positive and finite");
    if (!(g > 0.0) || !std::isfinite(g))
        throw DomainError("ReservoirSpec: g must be positive and finite");
    if (thermal_kind == ThermalKind::BoseEinstein) {
        if (!(theta > 0.0) || !std::isfinite(theta))
            throw DomainError("ReservoirSpec: theta must be positive and finite");
    } else {
        if (!(n0 >= 0.0) || !std::isfinite(n0))
            throw DomainError("ReservoirSpec: n0 must be nonnegative and finite");
    }
    if (!std::isfinite(r()))
        throw DomainError("ReservoirSpec: r = omega_c/omega_0 not finite");
}

ReservoirSpec ReservoirSpec::bose_einstein(double omega_c, double g, double theta,
                                           double omega_0) {
    ReservoirSpec s;
    s.omega_c = omega_c;
    s.omega_0 = omega_0;
    s.g = g;
    s.thermal_kind = ThermalKind::BoseEinstein;
    s.theta = theta;
    s.validate();
    return s;
}

ReservoirSpec ReservoirSpec::constant_n(double omega_c, double g, double n0,
                                        double omega_0) {
    ReservoirSpec s;
    s.omega_c = omega_c;
    s.omega_0 = omega_0;
    s.g = g;
    s.thermal_kind = ThermalKind::ConstantN;
    s.n0 = n0;
    s.validate();
    return s;
}

double ohmic_density(double omega, const ReservoirSpec& spec) {
    if (omega < 0.0) {
        std::ostringstream os;
        os << "ohmic_density: omega must be >= 0, got " << omega;
        throw DomainError(os.str());
    }
    const double wc2 = spec.omega_c * spec.omega_c;
    return (2.0 * omega / M_PI) * wc2 / (wc2 + omega * omega);
}

double thermal_occupation(double omega, const ReservoirSpec& spec) {
    switch (spec.thermal_kind) {
        case ThermalKind::ConstantN:
            return spec.n0;
        case ThermalKind::BoseEinstein: {
            if (omega == 0.0)
                throw DomainError("thermal_occupation: Bose-Einstein occupation singular at omega = 0");
            const double x = omega / (spec.theta * spec.omega_0);
            return 1.0 / std::expm1(x);
        }
    }
    throw DomainError("thermal_occupation: unknown thermal model");
}

double kappa_beta(double omega, const ReservoirSpec& spec) {
    // step convention: theta(w) = 1 for w > 0, 0 for w <= 0, so kappa(0) = 0
    if (omega > 0.0)
        return ohmic_density(omega, spec) * (thermal_occupation(omega, spec) + 1.0);
    if (omega < 0.0)
        return ohmic_density(-omega, spec) * thermal_occupation(-omega, spec);
    return 0.0;
}

std::string to_string(SpectralKind k) {
    switch (k) {
        case SpectralKind::OhmicLorentzian: return "ohmic_lorentzian";
    }
    return "?";
}

std::string to_string(ThermalKind k) {
    switch (k) {
        case ThermalKind::BoseEinstein: return "bose_einstein";
        case ThermalKind::ConstantN: return "constant_n";
    }
    return "?";
}

}  // namespace zenocat
