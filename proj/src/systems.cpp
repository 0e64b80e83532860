#include "shannon1d/systems.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace shannon1d {

namespace {

constexpr double pi = boost::math::constants::pi<double>();

// ln A_n = -(n/2) ln 2 - (1/4) ln pi - (1/2) ln n! + (1/4) ln beta
double log_hermite_normalization(int n, double beta) {
  return -0.5 * n * std::log(2.0) - 0.25 * std::log(pi) - 0.5 * std::lgamma(n + 1.0) +
         0.25 * std::log(beta);
}

// Hermite-Gaussian eigenfunction with inverse squared width `beta`.
double hermite_gaussian(int n, double beta, double log_norm, double x) {
  const double y = std::sqrt(beta) * x;
  return std::exp(log_norm - 0.5 * y * y) * hermite_eval(n, y);
}

double sinc(double z) {
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

Interval symmetric(double half_width) { return Interval{-half_width, half_width}; }

// Mass beyond this radius is below e^-100 for the orders we support.
double oscillator_window(int n, double beta) {
  return (10.0 + std::sqrt(2.0 * n + 1.0)) / std::sqrt(beta);
}

std::vector<double> scaled_hermite_nodes(int n, double beta) {
  std::vector<double> nodes = hermite_roots(n);
  const double s = 1.0 / std::sqrt(beta);
  for (double& r : nodes) r *= s;
  return nodes;
}

Density hermite_gaussian_density(int n, double beta, Space space) {
  const double log_norm = log_hermite_normalization(n, beta);
  DensityLayout layout;
  layout.window = symmetric(oscillator_window(n, beta));
  layout.nodes = scaled_hermite_nodes(n, beta);
  return Density(
      [n, beta, log_norm](double t) {
        const double psi = hermite_gaussian(n, beta, log_norm, t);
        return psi * psi;
      },
      space, std::move(layout));
}

// Phase factors sin(n pi / 2) and cos(n pi / 2), exact.
double sin_half_pi(int n) {
  static constexpr double table[4] = {0.0, 1.0, 0.0, -1.0};
  return table[n % 4];
}
double cos_half_pi(int n) {
  static constexpr double table[4] = {1.0, 0.0, -1.0, 0.0};
  return table[n % 4];
}

// Interior zeros of the box eigenfunction; the walls are excluded.
std::vector<double> box_nodes(const BoxState& state) {
  std::vector<double> nodes;
  const double half = 0.5 * state.xc();
  const double offset = state.parity() == Parity::cosine ? 0.5 : 0.0;
  for (int j = -state.n(); j <= state.n(); ++j) {
    const double x = (j + offset) * pi / state.kn();
    if (std::abs(x) < half * (1.0 - 1e-12)) nodes.push_back(x);
  }
  return nodes;
}

}  // namespace

std::string_view to_string(System system) {
  return system == System::oscillator ? "oscillator" : "box";
}

OscillatorState::OscillatorState(int n, double omega, UnitSystem units)
    : n_(n), omega_(omega), units_(units) {
  if (n < 0) throw std::domain_error("oscillator quantum number must be >= 0");
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::domain_error("oscillator frequency must be positive, got " + std::to_string(omega));
  }
  validate(units_);
  beta_ = units_.m * omega_ / units_.hbar;
}

BoxState::BoxState(int n, double xc, UnitSystem units) : n_(n), xc_(xc), units_(units) {
  if (n < 1) throw std::domain_error("box quantum number must be >= 1");
  if (!(xc > 0.0) || !std::isfinite(xc)) {
    throw std::domain_error("box width must be positive, got " + std::to_string(xc));
  }
  validate(units_);
  kn_ = n_ * pi / xc_;
}

QuantumState make_state(System system, int n, double parameter, UnitSystem units) {
  if (system == System::oscillator) return OscillatorState(n, parameter, units);
  return BoxState(n, parameter, units);
}

System system_of(const QuantumState& state) {
  return std::holds_alternative<OscillatorState>(state) ? System::oscillator : System::box;
}

int quantum_number(const QuantumState& state) {
  return std::visit([](const auto& s) { return s.n(); }, state);
}

double control_parameter(const QuantumState& state) {
  if (const auto* osc = std::get_if<OscillatorState>(&state)) return osc->omega();
  return std::get<BoxState>(state).xc();
}

const UnitSystem& units_of(const QuantumState& state) {
  return std::visit([](const auto& s) -> const UnitSystem& { return s.units(); }, state);
}

double hermite_eval(int n, double y) {
  if (n < 0) throw std::domain_error("Hermite order must be >= 0");
  double previous = 1.0;
  if (n == 0) return previous;
  double current = 2.0 * y;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * y * current - 2.0 * k * previous;
    previous = current;
    current = next;
  }
  return current;
}

std::vector<double> hermite_roots(int n) {
  if (n < 0) throw std::domain_error("Hermite order must be >= 0");
  std::vector<double> roots;
  if (n == 0) return roots;
  // All zeros lie inside the classically allowed region |y| < sqrt(2n + 1).
  const double bound = std::sqrt(2.0 * n + 1.0);
  const int samples = 400 * n;
  const auto f = [n](double y) { return hermite_eval(n, y); };
  const auto tol = [](double a, double b) { return std::abs(b - a) <= 4e-16 * std::max(1.0, std::abs(a)); };
  double a = -bound;
  double fa = f(a);
  for (int i = 1; i <= samples; ++i) {
    const double b = -bound + 2.0 * bound * i / samples;
    const double fb = f(b);
    if (fb == 0.0) {
      roots.push_back(b);
    } else if (fa != 0.0 && std::signbit(fa) != std::signbit(fb)) {
      const auto [lo, hi] = boost::math::tools::bisect(f, a, b, tol);
      roots.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  if (static_cast<int>(roots.size()) != n) {
    throw std::logic_error("Hermite root scan found " + std::to_string(roots.size()) +
                           " roots for order " + std::to_string(n));
  }
  // Odd orders have an exact zero at the origin.
  if (n % 2 == 1) roots[n / 2] = 0.0;
  return roots;
}

double oscillator_energy(const OscillatorState& state) {
  return state.units().hbar * state.omega() * (state.n() + 0.5);
}

double box_energy(const BoxState& state) {
  const auto& u = state.units();
  const double n = state.n();
  return pi * pi * u.hbar * u.hbar * n * n / (2.0 * u.m * state.xc() * state.xc());
}

double energy(const QuantumState& state) {
  if (const auto* osc = std::get_if<OscillatorState>(&state)) return oscillator_energy(*osc);
  return box_energy(std::get<BoxState>(state));
}

Wavefunction oscillator_wavefunction(const OscillatorState& state) {
  const int n = state.n();
  const double beta = state.beta();
  const double log_norm = log_hermite_normalization(n, beta);
  Wavefunction psi;
  psi.value = [n, beta, log_norm](double x) { return hermite_gaussian(n, beta, log_norm, x); };
  psi.derivative = [n, beta, log_norm](double x) {
    const double sb = std::sqrt(beta);
    const double y = sb * x;
    const double lower = n > 0 ? 2.0 * n * hermite_eval(n - 1, y) : 0.0;
    return std::exp(log_norm - 0.5 * y * y) * sb * (lower - y * hermite_eval(n, y));
  };
  psi.window = symmetric(oscillator_window(n, beta));
  psi.nodes = scaled_hermite_nodes(n, beta);
  return psi;
}

Wavefunction box_wavefunction(const BoxState& state) {
  const double k = state.kn();
  const double amplitude = std::sqrt(2.0 / state.xc());
  Wavefunction psi;
  if (state.parity() == Parity::cosine) {
    psi.value = [k, amplitude](double x) { return amplitude * std::cos(k * x); };
    psi.derivative = [k, amplitude](double x) { return -amplitude * k * std::sin(k * x); };
  } else {
    psi.value = [k, amplitude](double x) { return amplitude * std::sin(k * x); };
    psi.derivative = [k, amplitude](double x) { return amplitude * k * std::cos(k * x); };
  }
  psi.support = symmetric(0.5 * state.xc());
  psi.window = psi.support;
  psi.nodes = box_nodes(state);
  return psi;
}

Wavefunction wavefunction(const QuantumState& state) {
  if (const auto* osc = std::get_if<OscillatorState>(&state)) return oscillator_wavefunction(*osc);
  return box_wavefunction(std::get<BoxState>(state));
}

std::complex<double> oscillator_momentum_amplitude(const OscillatorState& state, double p) {
  // The transform of a Hermite-Gaussian is (-i)^n times the same function of p
  // with beta replaced by 1 / (beta hbar^2).
  const int n = state.n();
  const double beta_p = 1.0 / (state.beta() * state.units().hbar * state.units().hbar);
  const double magnitude = hermite_gaussian(n, beta_p, log_hermite_normalization(n, beta_p), p);
  static const std::complex<double> phases[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return phases[n % 4] * magnitude;
}

std::complex<double> box_momentum_amplitude(const BoxState& state, double p) {
  const double hbar = state.units().hbar;
  const double L = state.xc();
  const double k = state.kn();
  const double q = p / hbar;
  const double prefactor = std::sqrt(2.0 / L) / std::sqrt(2.0 * pi * hbar);
  const bool cosine = state.parity() == Parity::cosine;

  double bracket;
  if (std::min(std::abs(q - k), std::abs(q + k)) < 0.5 * k) {
    // Near the peaks at q = +-k: the two shifted sinc terms, series-guarded.
    const double minus = 0.5 * L * sinc(0.5 * (k - q) * L);
    const double plus = 0.5 * L * sinc(0.5 * (k + q) * L);
    bracket = cosine ? minus + plus : minus - plus;
  } else {
    const double common = 2.0 * k / (k * k - q * q);
    bracket = cosine ? sin_half_pi(state.n()) * std::cos(0.5 * q * L) * common
                     : -cos_half_pi(state.n()) * std::sin(0.5 * q * L) * common;
  }
  const double value = prefactor * bracket;
  return cosine ? std::complex<double>(value, 0.0) : std::complex<double>(0.0, -value);
}

Density oscillator_position_density(const OscillatorState& state) {
  return hermite_gaussian_density(state.n(), state.beta(), Space::position);
}

Density oscillator_momentum_density(const OscillatorState& state) {
  const double hbar = state.units().hbar;
  return hermite_gaussian_density(state.n(), 1.0 / (state.beta() * hbar * hbar), Space::momentum);
}

Density box_position_density(const BoxState& state) {
  const Wavefunction psi = box_wavefunction(state);
  DensityLayout layout;
  layout.support = psi.support;
  layout.nodes = psi.nodes;
  auto value = psi.value;
  return Density(
      [value](double x) {
        const double v = value(x);
        return v * v;
      },
      Space::position, std::move(layout));
}

Density box_momentum_density(const BoxState& state) {
  const double hbar = state.units().hbar;
  const double L = state.xc();
  const double k = state.kn();
  const double peak = hbar * k;
  const double spacing = 2.0 * pi * hbar / L;

  DensityLayout layout;
  layout.window = symmetric(2.0 * peak + 16.0 * spacing);
  layout.periodic_zeros =
      PeriodicZeros{state.parity() == Parity::cosine ? 0.5 * spacing : 0.0, spacing};
  // |psi~|^2 = 4 k^2 cos^2 / (pi hbar L (k^2 - q^2)^2) <= 64 k^2 hbar^3 / (9 pi L p^4) for |p| >= 2 hbar k
  layout.tail = PowerTail{64.0 * k * k * hbar * hbar * hbar / (9.0 * pi * L), 4.0, 2.0 * peak};
  return Density([state](double p) { return std::norm(box_momentum_amplitude(state, p)); },
                 Space::momentum, std::move(layout));
}

Density position_density(const QuantumState& state) {
  if (const auto* osc = std::get_if<OscillatorState>(&state)) return oscillator_position_density(*osc);
  return box_position_density(std::get<BoxState>(state));
}

Density momentum_density(const QuantumState& state) {
  if (const auto* osc = std::get_if<OscillatorState>(&state)) return oscillator_momentum_density(*osc);
  return box_momentum_density(std::get<BoxState>(state));
}

}  // namespace shannon1d
