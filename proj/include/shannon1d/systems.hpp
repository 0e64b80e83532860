#pragma once

#include <complex>
#include <string_view>
#include <variant>
#include <vector>

#include "shannon1d/density.hpp"
#include "shannon1d/units.hpp"

namespace shannon1d {

enum class System { oscillator, box };

std::string_view to_string(System system);

/// Stationary state of V(x) = m omega^2 x^2 / 2.
class OscillatorState {
 public:
  /// Throws std::domain_error for n < 0 or omega <= 0.
  OscillatorState(int n, double omega, UnitSystem units = atomic_units());

  int n() const { return n_; }
  double omega() const { return omega_; }
  /// m omega / hbar, the inverse squared length scale of the eigenfunctions.
  double beta() const { return beta_; }
  const UnitSystem& units() const { return units_; }

 private:
  int n_;
  double omega_;
  double beta_;
  UnitSystem units_;
};

enum class Parity { cosine, sine };

/// Stationary state of the infinite well of width xc centred on the origin.
class BoxState {
 public:
  /// Throws std::domain_error for n < 1 or xc <= 0.
  BoxState(int n, double xc, UnitSystem units = atomic_units());

  int n() const { return n_; }
  double xc() const { return xc_; }
  /// n pi / xc; makes psi vanish at +-xc/2.
  double kn() const { return kn_; }
  /// Cosine for odd n, sine for even n.
  Parity parity() const { return n_ % 2 == 1 ? Parity::cosine : Parity::sine; }
  const UnitSystem& units() const { return units_; }

 private:
  int n_;
  double xc_;
  double kn_;
  UnitSystem units_;
};

using QuantumState = std::variant<OscillatorState, BoxState>;

/// Builds a state from its control parameter (omega for the oscillator, xc for the box).
QuantumState make_state(System system, int n, double parameter, UnitSystem units = atomic_units());
System system_of(const QuantumState& state);
int quantum_number(const QuantumState& state);
double control_parameter(const QuantumState& state);
const UnitSystem& units_of(const QuantumState& state);

/// Physicists' Hermite polynomial by upward recurrence.
double hermite_eval(int n, double y);

/// The n real zeros of H_n, ascending.
std::vector<double> hermite_roots(int n);

double oscillator_energy(const OscillatorState& state);
double box_energy(const BoxState& state);
double energy(const QuantumState& state);

Wavefunction oscillator_wavefunction(const OscillatorState& state);
Wavefunction box_wavefunction(const BoxState& state);
Wavefunction wavefunction(const QuantumState& state);

/// Closed-form momentum amplitudes with the (2 pi hbar)^-1/2 convention.
std::complex<double> oscillator_momentum_amplitude(const OscillatorState& state, double p);
std::complex<double> box_momentum_amplitude(const BoxState& state, double p);

Density oscillator_position_density(const OscillatorState& state);
Density oscillator_momentum_density(const OscillatorState& state);
Density box_position_density(const BoxState& state);
Density box_momentum_density(const BoxState& state);

Density position_density(const QuantumState& state);
Density momentum_density(const QuantumState& state);

}  // namespace shannon1d
