#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace shannon1d {

enum class Space { position, momentum };

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool finite() const;
  bool contains(double t) const { return t >= lo && t <= hi; }
};

/// rho(t) <= coefficient * |t|^-exponent for |t| >= from.
struct PowerTail {
  double coefficient;
  double exponent;
  double from;
};

/// Zeros that repeat with a fixed spacing all the way out along the tails,
/// i.e. at origin + j * spacing (oscillating momentum distributions).
struct PeriodicZeros {
  double origin;
  double spacing;
};

/// Describes where a density lives and what shape the quadrature must respect.
struct DensityLayout {
  Interval support;
  /// Region that carries all the mass to well below any quadrature tolerance.
  /// Equals `support` when the support is finite.
  Interval window;
  /// Interior zeros, sorted.
  std::vector<double> nodes;
  std::optional<PeriodicZeros> periodic_zeros;
  /// Present for algebraically decaying tails; the quadrature then extends past
  /// `window` until the tail is resolved.
  std::optional<PowerTail> tail;
};

/// A normalized probability density on position or momentum space, exposed as
/// a pure evaluator so that quadrature controls sampling.
class Density {
 public:
  Density(std::function<double(double)> evaluator, Space space, DensityLayout layout);

  /// Zero outside the support.
  double operator()(double t) const;

  Space space() const { return space_; }
  const Interval& support() const { return layout_.support; }
  const Interval& window() const { return layout_.window; }
  const std::vector<double>& nodes() const { return layout_.nodes; }
  const std::optional<PeriodicZeros>& periodic_zeros() const { return layout_.periodic_zeros; }
  const std::optional<PowerTail>& tail() const { return layout_.tail; }

  /// Every node and periodic zero strictly inside (lo, hi), bracketed by lo and hi.
  std::vector<double> breakpoints(double lo, double hi) const;

  /// The same distribution expressed in a coordinate stretched by `factor`:
  /// t' = factor * t, rho'(t') = rho(t' / factor) / factor.
  Density rescaled(double factor) const;

 private:
  std::function<double(double)> evaluator_;
  Space space_;
  DensityLayout layout_;
};

/// A real eigenfunction together with its derivative and zero structure.
struct Wavefunction {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  Interval support;
  /// Region outside which |psi| is negligible (== support when finite).
  Interval window;
  std::vector<double> nodes;

  double operator()(double x) const { return support.contains(x) ? value(x) : 0.0; }
};

}  // namespace shannon1d
