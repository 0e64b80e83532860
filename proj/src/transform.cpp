#include "shannon1d/transform.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <variant>
#include <vector>

#include "shannon1d/errors.hpp"
#include "shannon1d/quadrature.hpp"

namespace shannon1d {

namespace {

constexpr double pi = boost::math::constants::pi<double>();

void check(const FourierSpec& spec) {
  if (!(spec.tolerance > 0.0)) throw std::domain_error("Fourier tolerance must be positive");
  if (!(spec.truncation_radius > 0.0)) throw std::domain_error("truncation radius must be positive");
  if (spec.max_subdivisions <= 0) throw std::domain_error("max_subdivisions must be positive");
}

Interval integration_range(const Wavefunction& psi, const FourierSpec& spec) {
  if (psi.support.finite()) return psi.support;
  return Interval{std::max(psi.support.lo, -spec.truncation_radius),
                  std::min(psi.support.hi, spec.truncation_radius)};
}

std::vector<double> kernel_breakpoints(const Wavefunction& psi, Interval range, double p, double hbar) {
  std::vector<double> points{range.lo};
  for (double node : psi.nodes) {
    if (node > range.lo && node < range.hi) points.push_back(node);
  }
  if (p != 0.0) {
    // One kernel period per panel is well inside what a 21-point rule resolves.
    const double period = 2.0 * pi * hbar / std::abs(p);
    for (double j = std::ceil(range.lo / period);; j += 1.0) {
      const double z = j * period;
      if (z >= range.hi) break;
      if (z > range.lo) points.push_back(z);
    }
  }
  points.push_back(range.hi);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace

FourierSpec default_fourier_spec(const QuantumState& state) {
  FourierSpec spec;
  if (const auto* osc = std::get_if<OscillatorState>(&state)) {
    spec.truncation_radius = 10.0 / std::sqrt(osc->beta());
  } else {
    spec.truncation_radius = 0.5 * std::get<BoxState>(state).xc();
  }
  return spec;
}

std::complex<double> numerical_ft(const Wavefunction& psi, double p, const FourierSpec& spec,
                                  double hbar) {
  check(spec);
  if (!(hbar > 0.0)) throw std::domain_error("hbar must be positive");
  const Interval range = integration_range(psi, spec);
  const std::vector<double> points = kernel_breakpoints(psi, range, p, hbar);
  const quad::Options options{spec.tolerance, spec.max_subdivisions};
  const double q = p / hbar;

  // psi is real: Re = int psi cos(qx), Im = -int psi sin(qx).
  const double re = quad::integrate([&](double x) { return psi(x) * std::cos(q * x); }, points, options).value;
  const double im = p == 0.0 ? 0.0
                             : -quad::integrate([&](double x) { return psi(x) * std::sin(q * x); },
                                                points, options)
                                    .value;
  const double scale = 1.0 / std::sqrt(2.0 * pi * hbar);
  return {scale * re, scale * im};
}

double parseval_check(const Wavefunction& psi, const FourierSpec& spec, double hbar) {
  check(spec);
  // Shells are added until one carries less than this mass; for tails no
  // heavier than p^-4 the remainder is then below shell_threshold / 7.
  constexpr double shell_threshold = 1e-7;
  constexpr int max_doublings = 24;

  const Interval range = integration_range(psi, spec);
  // Half the spacing of the zeros of |psi~|^2 for a wall-bounded psi, so
  // panel edges land on them for either parity.
  const double step = pi * hbar / (range.hi - range.lo);
  const quad::Options options{1e-9, spec.max_subdivisions};
  const auto gamma = [&](double p) { return std::norm(numerical_ft(psi, p, spec, hbar)); };

  auto panels = [step](double a, double b) {
    std::vector<double> points;
    const int count = std::max(1, static_cast<int>(std::ceil((b - a) / step)));
    for (int i = 0; i <= count; ++i) points.push_back(a + (b - a) * i / count);
    return points;
  };

  double radius = 64.0 * step;
  double total = quad::integrate(gamma, panels(-radius, radius), options).value;
  for (int d = 0; d < max_doublings; ++d) {
    const double shell = quad::integrate(gamma, panels(radius, 2.0 * radius), options).value +
                         quad::integrate(gamma, panels(-2.0 * radius, -radius), options).value;
    total += shell;
    radius *= 2.0;
    if (shell < shell_threshold) return total;
  }
  throw ConvergenceError("Parseval integral tail did not settle", 1.0 - total, shell_threshold);
}

Wavefunction dilated(const Wavefunction& psi, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("dilation factor must be positive");
  const double amplitude = std::sqrt(lambda);
  Wavefunction out;
  auto value = psi.value;
  auto derivative = psi.derivative;
  out.value = [value, lambda, amplitude](double x) { return amplitude * value(lambda * x); };
  if (derivative) {
    out.derivative = [derivative, lambda, amplitude](double x) {
      return amplitude * lambda * derivative(lambda * x);
    };
  }
  auto shrink = [lambda](Interval i) { return Interval{i.lo / lambda, i.hi / lambda}; };
  out.support = shrink(psi.support);
  out.window = shrink(psi.window);
  for (double node : psi.nodes) out.nodes.push_back(node / lambda);
  return out;
}

}  // namespace shannon1d
