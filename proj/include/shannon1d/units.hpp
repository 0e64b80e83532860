#pragma once

namespace shannon1d {

/// Reference constants that make the modified entropies dimensionless.
///
/// Values are the Bohr radius, reduced Planck constant and particle mass
/// expressed in whatever unit system the caller works in. Atomic units are
/// the canonical internal representation: all three equal one.
struct UnitSystem {
  double a0 = 1.0;
  double hbar = 1.0;
  double m = 1.0;

  /// hbar / a0, the momentum scale inside the momentum-space logarithm.
  double momentum_scale() const { return hbar / a0; }

  friend bool operator==(const UnitSystem&, const UnitSystem&) = default;
};

UnitSystem atomic_units();

/// Atomic units with each constant multiplied by its scale.
/// Throws std::domain_error unless every scale is positive and finite.
UnitSystem rescaled(double scale_length, double scale_action, double scale_mass);

/// Throws std::domain_error if any constant is non-positive or not finite.
void validate(const UnitSystem& units);

}  // namespace shannon1d
