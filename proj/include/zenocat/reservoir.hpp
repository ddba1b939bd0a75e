#pragma once

#include <string>

namespace zenocat {

enum class SpectralKind { OhmicLorentzian };

enum class ThermalKind {
    BoseEinstein,  // N(w) = 1/(exp(w/(theta*omega0)) - 1)
    ConstantN,     // N(w) = n0 for all w (flat occupation)
};

// Reservoir spectrum + thermal occupation.  Units: hbar = 1, frequencies in
// units of omega0 unless omega0 is set explicitly; g is dimensionless.
struct ReservoirSpec {
    SpectralKind spectral_kind = SpectralKind::OhmicLorentzian;
    double omega_c = 10.0;  // cutoff frequency
    double omega_0 = 1.0;   // system oscillator frequency
    double g = 0.1;         // system-reservoir coupling
    ThermalKind thermal_kind = ThermalKind::BoseEinstein;
    double theta = 100.0;   // dimensionless temperature k_B T / (hbar omega0)
    double n0 = 100.0;      // flat occupation for ConstantN

    double r() const { return omega_c / omega_0; }

    // Occupation at the system frequency.
    double n_omega0() const;

    void validate() const;  // throws DomainError on bad parameters

    static ReservoirSpec bose_einstein(double omega_c, double g, double theta,
                                       double omega_0 = 1.0);
    static ReservoirSpec constant_n(double omega_c, double g, double n0,
                                    double omega_0 = 1.0);
};

// Ohmic spectral density with Lorentzian cutoff, (2 w / pi) wc^2 / (wc^2 + w^2).
// Defined for w >= 0; negative w throws DomainError.
double ohmic_density(double omega, const ReservoirSpec& spec);

// Mean thermal occupation N(omega).  BoseEinstein requires omega > 0.
double thermal_occupation(double omega, const ReservoirSpec& spec);

// Thermal spectral density on the whole real line:
//   J(w)[N(w)+1] for w > 0,  J(-w) N(-w) for w < 0,  0 at w = 0.
double kappa_beta(double omega, const ReservoirSpec& spec);

std::string to_string(SpectralKind k);
std::string to_string(ThermalKind k);

}  // namespace zenocat
