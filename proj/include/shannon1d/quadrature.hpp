#pragma once

#include <functional>
#include <span>

namespace shannon1d::quad {

struct Estimate {
  double value = 0.0;
  double abs_error = 0.0;
  int subdivisions = 0;
};

struct Options {
  double abs_tolerance = 1e-10;
  int max_subdivisions = 20000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod quadrature.
///
/// `breakpoints` must be sorted and hold at least two points; each adjacent
/// pair is an initial panel. The panel with the largest error estimate is
/// bisected until the summed estimate is below `abs_tolerance`. Endpoints are
/// never evaluated, so integrable endpoint singularities (log cusps at
/// wavefunction nodes) are fine as long as they sit on a breakpoint.
///
/// Throws ConvergenceError after `max_subdivisions` bisections.
Estimate integrate(const Integrand& f, std::span<const double> breakpoints, const Options& options);

Estimate integrate(const Integrand& f, double a, double b, const Options& options);

}  // namespace shannon1d::quad
