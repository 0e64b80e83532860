#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shannon1d/entropy.hpp"
#include "shannon1d/systems.hpp"

namespace shannon1d {

/// Default search interval for find_crossing: wide enough for n <= 3 and
/// atomic units, where Sx - Sp is monotone in the parameter.
std::pair<double, double> default_crossing_bracket(System system);

struct CrossingResult {
  System system = System::oscillator;
  int n = 0;
  /// omega or xc where Sx = Sp.
  double parameter_value = 0.0;
  /// Common value of Sx and Sp there.
  double entropy_value = 0.0;
  /// Sx - Sp at parameter_value.
  double residual = 0.0;
  std::pair<double, double> bracket;
};

/// Root of Sx(theta) - Sp(theta) on the bracket, by bisection to width 1e-8
/// followed by one secant step. Throws BracketError without a sign change.
CrossingResult find_crossing(System system, int n, std::pair<double, double> bracket,
                             const QuadratureSpec& spec);

struct TableRow {
  double parameter = 0.0;
  /// One report per requested quantum number, in request order.
  std::vector<EntropyReport> entries;
};

struct TableArtifact {
  System system = System::oscillator;
  std::vector<int> n_values;
  std::vector<TableRow> rows;
  UnitSystem units;
  QuadratureSpec spec;
};

/// Frequencies of the published oscillator table.
std::vector<double> oscillator_table_grid();
/// Box widths of the published infinite-well table.
std::vector<double> box_table_grid();
/// {0, 1, 2} for the oscillator, {1, 2, 3} for the box.
std::vector<int> default_quantum_numbers(System system);

/// Rows are evaluated concurrently and returned in grid order. Failures are
/// rethrown with the offending row attached to the message.
TableArtifact generate_table(System system, const std::vector<double>& grid,
                             const std::vector<int>& n_values, const QuadratureSpec& spec);

struct Series {
  std::string name;
  std::string x_label;
  std::string y_label;
  std::vector<double> x;
  std::vector<double> y;
};

struct FigureDataset {
  int figure_id = 0;
  std::string title;
  std::vector<Series> series;
};

/// Valid ids are 2 through 8.
bool is_figure_id(int figure_id);

/// Plot-ready series for one of the study's figures. Throws std::invalid_argument
/// for an unknown id.
FigureDataset figure_data(int figure_id, const QuadratureSpec& spec);

struct ReferenceValue {
  std::string id;
  /// table1, table2, text-oscillator, text-box, text-comparison,
  /// crossing-oscillator or crossing-box.
  std::string source;
  std::string system;
  std::string quantity;
  int n = 0;
  double parameter = 0.0;
  double value = 0.0;
  bool gating = true;
  std::string note;
};

/// The published values bundled with the library.
const std::vector<ReferenceValue>& reference_values();

struct ValidationEntry {
  ReferenceValue reference;
  double computed = 0.0;
  double deviation = 0.0;
  bool pass = false;
};

struct ValidationReport {
  double tolerance = 5e-4;
  std::vector<ValidationEntry> entries;
  /// True iff every gating entry passes.
  bool passed = false;
  int gating_failures = 0;
};

struct ValidationOptions {
  double tolerance = 5e-4;
  /// Keep only entries whose source starts with this prefix.
  std::optional<std::string> only;
};

/// Recomputes every bundled reference value and compares at options.tolerance.
/// Mismatches are data in the report, never exceptions.
ValidationReport validate_against_references(const QuadratureSpec& spec, const ValidationOptions& options = {});

}  // namespace shannon1d
