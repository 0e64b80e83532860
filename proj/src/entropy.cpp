#include "shannon1d/entropy.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "shannon1d/errors.hpp"
#include "shannon1d/quadrature.hpp"

namespace shannon1d {

namespace {

constexpr double pi = boost::math::constants::pi<double>();
constexpr double tiny_density = 1e-300;
constexpr int max_radius_doublings = 40;

using Functional = std::function<double(double t, double rho)>;
// Upper bound on |integral| of the functional over |t| > R; +inf when unknown.
using TailBound = std::function<double(double R)>;

// -rho ln(c rho), with the rho -> 0 limit taken explicitly.
Functional entropy_functional(double log_scale) {
  return [log_scale](double, double rho) {
    if (rho < tiny_density) return 0.0;
    return -rho * (std::log(rho) + log_scale);
  };
}

// Bound for -rho ln(c rho) given rho <= A |t|^-s beyond `from`.
TailBound entropy_tail_bound(const PowerTail& tail, double log_scale) {
  return [tail, log_scale](double R) {
    const auto [A, s, from] = tail;
    const double envelope = A * std::pow(R, -s);
    // x |ln(c x)| is increasing below 1/(e c); the envelope must sit there.
    if (R < from || !(std::log(envelope) + log_scale < -1.0)) {
      return std::numeric_limits<double>::infinity();
    }
    const double head = 2.0 * A * std::pow(R, 1.0 - s) / (s - 1.0);
    return head * (s * std::log(R) - std::log(A) - log_scale + s / (s - 1.0));
  };
}

// Bound for |t|^k rho given rho <= A |t|^-s.
TailBound moment_tail_bound(const PowerTail& tail, int k) {
  return [tail, k](double R) {
    const auto [A, s, from] = tail;
    if (R < from || s <= k + 1.0) return std::numeric_limits<double>::infinity();
    return 2.0 * A * std::pow(R, 1.0 + k - s) / (s - 1.0 - k);
  };
}

double integrate_on(const Density& density, const Functional& f, double lo, double hi, double tol,
                    int max_subdivisions) {
  const std::vector<double> points = density.breakpoints(lo, hi);
  return quad::integrate([&](double t) { return f(t, density(t)); }, points,
                         quad::Options{tol, max_subdivisions})
      .value;
}

// Integral of f(t, rho(t)) over the support. Algebraic tails are handled by
// choosing a radius where `bound` is below tol/10 and then doubling the
// radius until two successive shells each change the result by less than tol.
double integrate_functional(const Density& density, const Functional& f, const QuadratureSpec& spec,
                            const TailBound& bound) {
  validate(spec);
  const double tol = spec.abs_tolerance;
  const int limit = spec.max_subdivisions;
  if (density.support().finite() || !density.tail()) {
    const Interval& w = density.window();
    return integrate_on(density, f, w.lo, w.hi, tol, limit);
  }

  double radius = std::max({density.window().hi, -density.window().lo, density.tail()->from});
  if (spec.momentum_tail_radius) radius = std::max(radius, *spec.momentum_tail_radius);
  int doublings = 0;
  while (bound && !(bound(radius) < 0.1 * tol)) {
    if (++doublings > max_radius_doublings) {
      throw ConvergenceError("tail bound never dropped below tolerance", bound(radius), tol);
    }
    radius *= 2.0;
  }

  double total = integrate_on(density, f, -radius, radius, 0.5 * tol, limit);
  int quiet = 0;
  double last_shell = 0.0;
  for (int d = 0; d < max_radius_doublings; ++d) {
    last_shell = integrate_on(density, f, radius, 2.0 * radius, 0.1 * tol, limit) +
                 integrate_on(density, f, -2.0 * radius, -radius, 0.1 * tol, limit);
    total += last_shell;
    radius *= 2.0;
    quiet = std::abs(last_shell) < tol ? quiet + 1 : 0;
    if (quiet == 2) return total;
  }
  throw ConvergenceError("tail integral did not settle under radius doubling", std::abs(last_shell), tol);
}

double entropy_with_scale(const Density& density, double reference, const QuadratureSpec& spec) {
  const double log_scale = std::log(reference);
  TailBound bound;
  if (density.tail()) bound = entropy_tail_bound(*density.tail(), log_scale);
  return integrate_functional(density, entropy_functional(log_scale), spec, bound);
}

void check_log_base(double log_base) {
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw std::domain_error("log base must be greater than 1");
  }
}

}  // namespace

void validate(const QuadratureSpec& spec) {
  if (!(spec.abs_tolerance > 0.0)) throw std::domain_error("abs_tolerance must be positive");
  if (spec.max_subdivisions <= 0) throw std::domain_error("max_subdivisions must be positive");
  if (spec.momentum_tail_radius && !(*spec.momentum_tail_radius > 0.0)) {
    throw std::domain_error("momentum_tail_radius must be positive");
  }
}

double bbm_bound() { return 1.0 + std::log(pi); }

DiscreteDistribution::DiscreteDistribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) throw std::domain_error("distribution has no outcomes");
  for (double p : probabilities_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::domain_error("probabilities must be non-negative, got " + std::to_string(p));
    }
  }
  const double sum = std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::domain_error("probabilities must sum to 1, got " + std::to_string(sum));
  }
}

double discrete_entropy(const DiscreteDistribution& dist, double log_base) {
  check_log_base(log_base);
  double nats = 0.0;
  for (double p : dist.probabilities()) {
    if (p > 0.0) nats -= p * std::log(p);
  }
  return nats / std::log(log_base);
}

double continuous_entropy(const Density& density, const QuadratureSpec& spec, double log_base) {
  check_log_base(log_base);
  return entropy_with_scale(density, 1.0, spec) / std::log(log_base);
}

double entropy_x(const Density& density, const UnitSystem& units, const QuadratureSpec& spec) {
  if (density.space() != Space::position) {
    throw std::invalid_argument("entropy_x needs a position-space density");
  }
  validate(units);
  return entropy_with_scale(density, units.a0, spec);
}

double entropy_p(const Density& density, const UnitSystem& units, const QuadratureSpec& spec) {
  if (density.space() != Space::momentum) {
    throw std::invalid_argument("entropy_p needs a momentum-space density");
  }
  validate(units);
  return entropy_with_scale(density, units.momentum_scale(), spec);
}

EntropyReport entropy_sum(const QuantumState& state, const QuadratureSpec& spec) {
  const UnitSystem& units = units_of(state);
  EntropyReport report;
  report.sx = entropy_x(position_density(state), units, spec);
  report.sp = entropy_p(momentum_density(state), units, spec);
  report.st = report.sx + report.sp;
  report.bbm_margin = report.st - bbm_bound();
  if (report.bbm_margin < -10.0 * spec.abs_tolerance) {
    throw InvariantViolation("entropy sum " + std::to_string(report.st) +
                             " is below the entropic bound 1 + ln(pi)");
  }
  return report;
}

double normalization(const Density& density, const QuadratureSpec& spec) {
  TailBound bound;
  if (density.tail()) bound = moment_tail_bound(*density.tail(), 0);
  return integrate_functional(density, [](double, double rho) { return rho; }, spec, bound);
}

Moments moments(const Density& density, const QuadratureSpec& spec) {
  TailBound first;
  TailBound second;
  if (density.tail()) {
    first = moment_tail_bound(*density.tail(), 1);
    second = moment_tail_bound(*density.tail(), 2);
  }
  Moments m;
  m.mean = integrate_functional(density, [](double t, double rho) { return t * rho; }, spec, first);
  m.second = integrate_functional(density, [](double t, double rho) { return t * t * rho; }, spec, second);
  return m;
}

UncertaintyReport uncertainty(const QuantumState& state, const QuadratureSpec& spec) {
  validate(spec);
  const UnitSystem& units = units_of(state);
  UncertaintyReport r;

  const Moments x = moments(position_density(state), spec);
  r.mean_x = x.mean;
  r.mean_x2 = x.second;

  const Density gamma = momentum_density(state);
  if (!gamma.tail()) {
    const Moments p = moments(gamma, spec);
    r.mean_p = p.mean;
    r.mean_p2 = p.second;
  } else {
    // p^2 gamma decays like p^-2, so work in position space instead:
    // <p^2> = hbar^2 integral psi'^2 dx, and <p> = 0 for a real eigenfunction.
    const Wavefunction psi = wavefunction(state);
    const double lo = psi.window.lo;
    const double hi = psi.window.hi;
    std::vector<double> points{lo};
    points.insert(points.end(), psi.nodes.begin(), psi.nodes.end());
    points.push_back(hi);
    const double kinetic = quad::integrate(
                               [&](double t) {
                                 const double d = psi.derivative(t);
                                 return d * d;
                               },
                               points, quad::Options{spec.abs_tolerance, spec.max_subdivisions})
                               .value;
    r.mean_p = 0.0;
    r.mean_p2 = units.hbar * units.hbar * kinetic;
  }

  r.dx = std::sqrt(std::max(0.0, r.mean_x2 - r.mean_x * r.mean_x));
  r.dp = std::sqrt(std::max(0.0, r.mean_p2 - r.mean_p * r.mean_p));
  r.product = r.dx * r.dp;
  r.kennard_margin = r.product - 0.5 * units.hbar;
  if (r.kennard_margin < -10.0 * spec.abs_tolerance) {
    throw InvariantViolation("Kennard product " + std::to_string(r.product) + " is below hbar/2");
  }
  return r;
}

}  // namespace shannon1d
