#pragma once

#include <complex>

namespace gfn {

using Complex = std::complex<double>;

/// Result of a numerical evaluation: value, accumulated absolute error
/// estimate, and the number of panels/subdivisions spent.
struct EvalResult {
  Complex value{};
  double abs_error_estimate = 0.0;
  int subdivisions_used = 1;
};

/// Point z = r e^{-i theta} of the closed right half-plane quadrant the
/// g-functions are evaluated on (r >= 0, 0 <= theta <= pi/2).
struct PolarArg {
  double r = 0.0;
  double theta = 0.0;

  Complex to_complex() const {
    return {r * std::cos(theta), -r * std::sin(theta)};
  }
};

}  // namespace gfn
