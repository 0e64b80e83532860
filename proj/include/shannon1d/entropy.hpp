#pragma once

#include <optional>
#include <vector>

#include "shannon1d/density.hpp"
#include "shannon1d/systems.hpp"
#include "shannon1d/units.hpp"

namespace shannon1d {

struct QuadratureSpec {
  double abs_tolerance = 1e-10;
  int max_subdivisions = 20000;
  /// Starting radius for algebraic momentum tails; derived from the tail bound when unset.
  std::optional<double> momentum_tail_radius;

  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

/// Throws std::domain_error for a non-positive tolerance or subdivision limit.
void validate(const QuadratureSpec& spec);

/// 1 + ln(pi): lower bound on Sx + Sp in one dimension.
double bbm_bound();

class DiscreteDistribution {
 public:
  /// Throws std::domain_error for negative entries or a sum off 1 by more than 1e-12.
  explicit DiscreteDistribution(std::vector<double> probabilities);

  const std::vector<double>& probabilities() const { return probabilities_; }
  std::size_t count() const { return probabilities_.size(); }

 private:
  std::vector<double> probabilities_;
};

/// -sum p_i log_b p_i, with 0 log 0 = 0. Bits by default.
double discrete_entropy(const DiscreteDistribution& dist, double log_base = 2.0);

/// -integral rho log_b rho. Bits by default; may be negative.
double continuous_entropy(const Density& density, const QuadratureSpec& spec, double log_base = 2.0);

/// -integral rho(x) ln(a0 rho(x)) dx, in nats.
double entropy_x(const Density& density, const UnitSystem& units, const QuadratureSpec& spec);

/// -integral gamma(p) ln((hbar / a0) gamma(p)) dp, in nats.
double entropy_p(const Density& density, const UnitSystem& units, const QuadratureSpec& spec);

struct EntropyReport {
  double sx = 0.0;
  double sp = 0.0;
  double st = 0.0;
  /// st - (1 + ln pi)
  double bbm_margin = 0.0;
};

/// Throws InvariantViolation if st falls below the entropic bound by more
/// than 10 * abs_tolerance.
EntropyReport entropy_sum(const QuantumState& state, const QuadratureSpec& spec);

struct Moments {
  double mean = 0.0;
  double second = 0.0;
};

double normalization(const Density& density, const QuadratureSpec& spec);

/// First and second raw moments. Throws ConvergenceError when the density's
/// tail decays too slowly for the second moment to settle.
Moments moments(const Density& density, const QuadratureSpec& spec);

struct UncertaintyReport {
  double mean_x = 0.0;
  double mean_x2 = 0.0;
  double mean_p = 0.0;
  double mean_p2 = 0.0;
  double dx = 0.0;
  double dp = 0.0;
  double product = 0.0;
  /// product - hbar / 2
  double kennard_margin = 0.0;
};

/// Throws InvariantViolation if the Kennard product drops below hbar / 2
/// by more than 10 * abs_tolerance.
UncertaintyReport uncertainty(const QuantumState& state, const QuadratureSpec& spec);

}  // namespace shannon1d
