#include "shannon1d/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "shannon1d/errors.hpp"

namespace shannon1d::quad {

namespace {

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

// 21-point Kronrod rule with its embedded 10-point Gauss rule; the error
// estimate uses the QUADPACK scaling of |K - G|.
Panel evaluate_panel(const Integrand& f, double a, double b) {
  using kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
  using gauss = boost::math::quadrature::gauss<double, 10>;
  const auto& x = kronrod::abscissa();
  const auto& wk = kronrod::weights();
  const auto& wg = gauss::weights();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 21> values{};
  values[0] = f(center);
  for (std::size_t i = 1; i < x.size(); ++i) {
    values[2 * i - 1] = f(center - half * x[i]);
    values[2 * i] = f(center + half * x[i]);
  }

  double kronrod_sum = values[0] * wk[0];
  double gauss_sum = 0.0;
  double abs_sum = std::abs(values[0]) * wk[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double pair = values[2 * i - 1] + values[2 * i];
    kronrod_sum += wk[i] * pair;
    abs_sum += wk[i] * (std::abs(values[2 * i - 1]) + std::abs(values[2 * i]));
    if (i % 2 == 1) gauss_sum += wg[i / 2] * pair;  // Gauss nodes sit at odd indices
  }
  const double mean = 0.5 * kronrod_sum;
  double asc_sum = wk[0] * std::abs(values[0] - mean);
  for (std::size_t i = 1; i < x.size(); ++i) {
    asc_sum += wk[i] * (std::abs(values[2 * i - 1] - mean) + std::abs(values[2 * i] - mean));
  }

  const double value = kronrod_sum * half;
  const double resabs = abs_sum * std::abs(half);
  const double resasc = asc_sum * std::abs(half);
  double error = std::abs((kronrod_sum - gauss_sum) * half);
  if (resasc != 0.0 && error != 0.0) {
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    error = std::max(50.0 * eps * resabs, error);
  }
  return Panel{a, b, value, error};
}

bool splittable(const Panel& p) {
  const double mid = 0.5 * (p.a + p.b);
  const double scale = std::max(std::abs(p.a), std::abs(p.b));
  return mid > p.a && mid < p.b && (p.b - p.a) > 64.0 * std::numeric_limits<double>::epsilon() * scale;
}

}  // namespace

Estimate integrate(const Integrand& f, std::span<const double> breakpoints, const Options& options) {
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("quadrature needs at least two breakpoints");
  }
  if (!(options.abs_tolerance > 0.0)) {
    throw std::domain_error("quadrature tolerance must be positive");
  }
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end())) {
    throw std::invalid_argument("quadrature breakpoints must be sorted");
  }

  std::priority_queue<Panel> active;
  double settled_value = 0.0;
  double settled_error = 0.0;
  double total_value = 0.0;
  double total_error = 0.0;

  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(b > a)) continue;
    Panel p = evaluate_panel(f, a, b);
    total_value += p.value;
    total_error += p.error;
    active.push(p);
  }

  int subdivisions = 0;
  while (total_error > options.abs_tolerance && !active.empty()) {
    Panel worst = active.top();
    active.pop();
    if (!splittable(worst)) {
      // Resolution floor reached: keep the panel as is.
      settled_value += worst.value;
      settled_error += worst.error;
      continue;
    }
    if (subdivisions >= options.max_subdivisions) {
      throw ConvergenceError("adaptive quadrature exceeded " +
                                 std::to_string(options.max_subdivisions) + " subdivisions",
                             total_error, options.abs_tolerance);
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
    ++subdivisions;
  }

  // Re-sum to drop the drift from incremental updates.
  Estimate result{settled_value, settled_error, subdivisions};
  while (!active.empty()) {
    result.value += active.top().value;
    result.abs_error += active.top().error;
    active.pop();
  }
  if (result.abs_error > options.abs_tolerance) {
    throw ConvergenceError("adaptive quadrature hit its resolution floor", result.abs_error,
                           options.abs_tolerance);
  }
  return result;
}

Estimate integrate(const Integrand& f, double a, double b, const Options& options) {
  const double points[2] = {a, b};
  return integrate(f, std::span<const double>(points, 2), options);
}

}  // namespace shannon1d::quad
