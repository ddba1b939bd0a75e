#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "zenocat/reservoir.hpp"

namespace zenocat {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Resolved run configuration.  Loaded from a sectioned key=value file, then
// overridden by CLI flags; unknown keys are rejected.
struct RunConfig {
    // [reservoir]
    std::string spectral_kind = "ohmic_lorentzian";
    std::string thermal_model = "bose_einstein";  // or constant_n
    double omega_c = 10.0;
    double omega_0 = 1.0;
    double g = 0.1;
    double theta = 100.0;
    double n0 = 100.0;

    // [cat]
    double alpha = 2.0;
    int n_max = 0;  // 0 -> automatic

    // [schedule]
    std::vector<double> omega_c_tau = {1.0, 0.1, 0.01};
    std::string scenario = "shuttered";  // shuttered | measured | markov
    int samples = 101;
    double t_max_decades = 5.0;  // time horizon in decoherence-time units

    // [rates]
    std::vector<double> r_values = {0.1, 1.0, 10.0};
    int tau_points = 25;
    double tau_min = 1e-3;  // in omega_c * tau
    double tau_max = 1e2;

    // [wigner]
    std::vector<double> wigner_r_panels = {10.0, 0.1};
    int wigner_n_grid = 129;

    // [pn]
    std::vector<double> pn_snapshot_fractions = {0.0, 0.25, 0.5, 1.0};  // of t_dec
    int pn_max_n = 16;

    // [output]
    std::string out_dir = "out";
    bool svg = false;
    unsigned threads = 0;  // 0 -> hardware

    ReservoirSpec reservoir(double r_override = 0.0) const;
    int resolved_n_max() const;

    // Serialization in the exact file format (also used by print-config).
    std::string to_text() const;

    static RunConfig load_file(const std::string& path);
    static RunConfig from_text(const std::string& text);
};

}  // namespace zenocat
