#include "shannon1d/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace shannon1d {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(name) + " must be positive and finite, got " +
                            std::to_string(value));
  }
}

}  // namespace

UnitSystem atomic_units() { return UnitSystem{}; }

UnitSystem rescaled(double scale_length, double scale_action, double scale_mass) {
  require_positive(scale_length, "scale_length");
  require_positive(scale_action, "scale_action");
  require_positive(scale_mass, "scale_mass");
  return UnitSystem{scale_length, scale_action, scale_mass};
}

void validate(const UnitSystem& units) {
  require_positive(units.a0, "a0");
  require_positive(units.hbar, "hbar");
  require_positive(units.m, "m");
}

}  // namespace shannon1d
