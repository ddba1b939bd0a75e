#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace zenocat::quad {

struct Result {
    double value = 0.0;
    double abs_error = 0.0;   // estimated, includes any tail bound added by the caller
    std::size_t evals = 0;
};

struct Options {
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;
    std::size_t max_intervals = 20000;  // refinement budget per call
    bool throw_on_failure = true;
};

// Adaptive Gauss-Kronrod (15 point) on [a, b].
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt = {});

// Same, but the initial subdivision is the sorted breakpoint list.  Useful for
// integrands with known peaks or many oscillation periods.
Result integrate_segments(const std::function<double(double)>& f,
                          const std::vector<double>& breakpoints,
                          const Options& opt = {});

// sin(x)/x with the removable singularity handled.
double sinc(double x);

// (1 - cos(x t)) / x^2 = (t^2/2) sinc^2(x t / 2), stable near x = 0.
double one_minus_cos_over_sq(double x, double t);

}  // namespace zenocat::quad
