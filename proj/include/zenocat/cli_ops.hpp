#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zenocat/config.hpp"

namespace zenocat::cli {

using FileSet = std::vector<std::pair<std::string, std::string>>;  // name -> content

// Decoherence time of the interference peak for the stationary-rate reference,
// 1 / (2 gamma_minus^M (1 + 2 alpha^2)).
double decoherence_time(const ReservoirSpec& spec, double alpha);

// rates.csv: tau sweep per r value with both rate routes cross-checked.
FileSet cmd_rates(const RunConfig& cfg);

// wigner_peak.csv (+ optional SVGs): normalized interference-peak decay for
// the stationary reference and each omega_c*tau, per r panel.
FileSet cmd_wigner_peak(const RunConfig& cfg);

// pn_snapshots.csv (+ optional SVGs): number distributions at snapshot times
// for scenarios {none, shuttered r_panels[...] at the smallest omega_c*tau}.
FileSet cmd_pn_snapshots(const RunConfig& cfg);

// wigner_field.csv: W(beta) lattice at t = 0 and one decoherence time.
FileSet cmd_wigner_field(const RunConfig& cfg);

}  // namespace zenocat::cli
