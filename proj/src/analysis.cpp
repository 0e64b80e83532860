#include "shannon1d/analysis.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "parallel.hpp"
#include "shannon1d/errors.hpp"

namespace shannon1d {

namespace {

double crossing_function(System system, int n, double parameter, const QuadratureSpec& spec) {
  const EntropyReport r = entropy_sum(make_state(system, n, parameter), spec);
  return r.sx - r.sp;
}

std::string row_context(System system, double parameter) {
  std::ostringstream out;
  out << to_string(system) << " table row " << (system == System::oscillator ? "omega=" : "xc=")
      << parameter << ": ";
  return out.str();
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * i / (count - 1);
  return out;
}

Series sample_density(const Density& density, std::string name, double lo, double hi) {
  Series s;
  s.name = std::move(name);
  s.x_label = density.space() == Space::position ? "x" : "p";
  s.y_label = density.space() == Space::position ? "rho(x)" : "gamma(p)";
  s.x = linspace(lo, hi, 401);
  for (double t : s.x) s.y.push_back(density(t));
  return s;
}

std::string format_parameter(double value) {
  std::ostringstream out;
  out.precision(4);
  out << std::fixed << value;
  return out.str();
}

// Entropy curves Sx, Sp (or St alone) for each quantum number over a grid.
FigureDataset entropy_curves(int id, std::string title, System system, const std::vector<double>& grid,
                             bool sum_only, const QuadratureSpec& spec) {
  const std::vector<int> ns = default_quantum_numbers(system);
  const TableArtifact table = generate_table(system, grid, ns, spec);
  const std::string x_label = system == System::oscillator ? "omega" : "xc";
  FigureDataset fig{id, std::move(title), {}};
  for (std::size_t j = 0; j < ns.size(); ++j) {
    const std::string suffix = "_n" + std::to_string(ns[j]);
    Series sx{"sx" + suffix, x_label, "Sx", grid, {}};
    Series sp{"sp" + suffix, x_label, "Sp", grid, {}};
    Series st{"st" + suffix, x_label, "St", grid, {}};
    for (const TableRow& row : table.rows) {
      sx.y.push_back(row.entries[j].sx);
      sp.y.push_back(row.entries[j].sp);
      st.y.push_back(row.entries[j].st);
    }
    if (sum_only) {
      fig.series.push_back(std::move(st));
    } else {
      fig.series.push_back(std::move(sx));
      fig.series.push_back(std::move(sp));
    }
  }
  return fig;
}

}  // namespace

std::pair<double, double> default_crossing_bracket(System system) {
  return system == System::oscillator ? std::pair{0.25, 4.0} : std::pair{2.0, 8.0};
}

CrossingResult find_crossing(System system, int n, std::pair<double, double> bracket,
                             const QuadratureSpec& spec) {
  auto [lo, hi] = bracket;
  if (!(lo > 0.0) || !(hi > lo)) {
    throw BracketError("crossing bracket must satisfy 0 < lo < hi");
  }
  const auto f = [&](double t) { return crossing_function(system, n, t, spec); };
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0 || f_hi == 0.0 || std::signbit(f_lo) == std::signbit(f_hi)) {
    throw BracketError("Sx - Sp does not change sign on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }

  const auto narrow = [](double a, double b) { return std::abs(b - a) <= 1e-8; };
  auto [a, b] = boost::math::tools::bisect(f, lo, hi, narrow);

  // One secant step across the final bracket.
  const double fa = f(a);
  const double fb = f(b);
  double root = 0.5 * (a + b);
  if (fb != fa) {
    const double secant = b - fb * (b - a) / (fb - fa);
    if (secant > a && secant < b) root = secant;
  }

  const EntropyReport at_root = entropy_sum(make_state(system, n, root), spec);
  CrossingResult result;
  result.system = system;
  result.n = n;
  result.parameter_value = root;
  result.entropy_value = 0.5 * (at_root.sx + at_root.sp);
  result.residual = at_root.sx - at_root.sp;
  result.bracket = bracket;
  return result;
}

std::vector<double> oscillator_table_grid() {
  return {0.06, 0.08, 0.2, 0.4, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.005};
}

std::vector<double> box_table_grid() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 1.0, 1.5009, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 6.0, 7.0, 8.0, 9.005};
}

std::vector<int> default_quantum_numbers(System system) {
  return system == System::oscillator ? std::vector<int>{0, 1, 2} : std::vector<int>{1, 2, 3};
}

TableArtifact generate_table(System system, const std::vector<double>& grid,
                             const std::vector<int>& n_values, const QuadratureSpec& spec) {
  validate(spec);
  if (n_values.empty()) throw std::invalid_argument("table needs at least one quantum number");
  for (double g : grid) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw std::domain_error("table grid values must be positive, got " + std::to_string(g));
    }
  }

  TableArtifact table;
  table.system = system;
  table.n_values = n_values;
  table.spec = spec;
  table.rows = detail::parallel_map<TableRow>(grid.size(), [&](std::size_t i) {
    TableRow row{grid[i], {}};
    try {
      for (int n : n_values) row.entries.push_back(entropy_sum(make_state(system, n, grid[i]), spec));
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(row_context(system, grid[i]) + e.what(), e.achieved_error(),
                             e.requested_tolerance());
    } catch (const InvariantViolation& e) {
      throw InvariantViolation(row_context(system, grid[i]) + e.what());
    } catch (const std::domain_error& e) {
      throw std::domain_error(row_context(system, grid[i]) + e.what());
    }
    return row;
  });
  return table;
}

bool is_figure_id(int figure_id) { return figure_id >= 2 && figure_id <= 8; }

FigureDataset figure_data(int figure_id, const QuadratureSpec& spec) {
  const std::vector<double> omega_grid = linspace(0.05, 8.05, 81);
  const std::vector<double> xc_grid = linspace(0.1, 9.1, 19);

  switch (figure_id) {
    case 2:
      return entropy_curves(2, "Sx and Sp versus omega, harmonic oscillator", System::oscillator,
                            omega_grid, false, spec);
    case 5:
      return entropy_curves(5, "Entropy sum versus omega, harmonic oscillator", System::oscillator,
                            omega_grid, true, spec);
    case 6:
      return entropy_curves(6, "Sx and Sp versus xc, particle in a box", System::box, xc_grid, false,
                            spec);
    case 8:
      return entropy_curves(8, "Entropy sum versus xc, particle in a box", System::box, xc_grid, true,
                            spec);
    case 3: {
      FigureDataset fig{3, "Ground-state densities of the oscillator for several omega", {}};
      for (double omega : {0.5, 2.5, 5.0}) {
        const OscillatorState s(0, omega);
        fig.series.push_back(sample_density(oscillator_position_density(s),
                                            "rho_n0_omega" + format_parameter(omega), -4.0, 4.0));
      }
      for (double omega : {0.5, 2.5, 5.0}) {
        const OscillatorState s(0, omega);
        fig.series.push_back(sample_density(oscillator_momentum_density(s),
                                            "gamma_n0_omega" + format_parameter(omega), -6.0, 6.0));
      }
      return fig;
    }
    case 4: {
      FigureDataset fig{4, "Oscillator densities for n = 0, 1, 2 at omega = 0.5", {}};
      for (int n : {0, 1, 2}) {
        fig.series.push_back(sample_density(oscillator_position_density(OscillatorState(n, 0.5)),
                                            "rho_n" + std::to_string(n), -6.0, 6.0));
      }
      for (int n : {0, 1, 2}) {
        fig.series.push_back(sample_density(oscillator_momentum_density(OscillatorState(n, 0.5)),
                                            "gamma_n" + std::to_string(n), -4.0, 4.0));
      }
      return fig;
    }
    case 7: {
      FigureDataset fig{7, "Particle-in-a-box densities for n = 1, 2, 3 at xc = 6", {}};
      for (int n : {1, 2, 3}) {
        fig.series.push_back(sample_density(box_position_density(BoxState(n, 6.0)),
                                            "rho_n" + std::to_string(n), -3.0, 3.0));
      }
      for (int n : {1, 2, 3}) {
        fig.series.push_back(sample_density(box_momentum_density(BoxState(n, 6.0)),
                                            "gamma_n" + std::to_string(n), -4.0, 4.0));
      }
      return fig;
    }
    default:
      throw std::invalid_argument("unknown figure id " + std::to_string(figure_id) +
                                  " (expected 2 through 8)");
  }
}

}  // namespace shannon1d
