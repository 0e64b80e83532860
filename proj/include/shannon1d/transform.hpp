#pragma once

#include <complex>

#include "shannon1d/density.hpp"
#include "shannon1d/systems.hpp"

namespace shannon1d {

struct FourierSpec {
  /// Half-width of the position-space integration range. Ignored for
  /// wavefunctions with finite support, which are integrated exactly.
  double truncation_radius = 10.0;
  double tolerance = 1e-12;
  int max_subdivisions = 20000;
};

/// Radius 10 / sqrt(beta) for the oscillator, the wall position for the box.
FourierSpec default_fourier_spec(const QuantumState& state);

/// (2 pi hbar)^-1/2 * integral psi(x) exp(-i p x / hbar) dx by adaptive
/// quadrature. The range is cut every kernel period and at the
/// nodes of psi. Throws ConvergenceError.
std::complex<double> numerical_ft(const Wavefunction& psi, double p, const FourierSpec& spec,
                                  double hbar = 1.0);

/// integral |psi~(p)|^2 dp with psi~ from numerical_ft; 1 for a normalized psi.
double parseval_check(const Wavefunction& psi, const FourierSpec& spec, double hbar = 1.0);

/// sqrt(lambda) psi(lambda x), which keeps the norm.
Wavefunction dilated(const Wavefunction& psi, double lambda);

}  // namespace shannon1d
