#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "shannon1d/analysis.hpp"

namespace shannon1d::cli {

inline constexpr const char* schema_version = "1.0";
inline constexpr const char* tolerance_env_var = "SHANNON1D_ABS_TOLERANCE";

enum ExitCode : int {
  exit_success = 0,
  exit_usage = 1,
  exit_numeric = 2,
  exit_validation = 3,
};

enum class Format { csv, json };

/// Default quadrature spec, with abs_tolerance taken from SHANNON1D_ABS_TOLERANCE
/// when set. Throws std::invalid_argument for an unparsable value.
QuadratureSpec default_spec_from_environment();

// Serializers shared by the CLI and its tests. CSV output starts with '#'
// metadata lines, then a header row; LF line endings throughout.
std::string state_csv(const QuantumState& state, const EntropyReport& entropy,
                      const UncertaintyReport& spread, const QuadratureSpec& spec, int precision);
std::string state_json(const QuantumState& state, const EntropyReport& entropy,
                       const UncertaintyReport& spread, const QuadratureSpec& spec);
std::string table_csv(int table_id, const TableArtifact& table, int precision);
std::string table_json(int table_id, const TableArtifact& table);
std::string figure_csv(const FigureDataset& figure, const QuadratureSpec& spec, int precision);
std::string figure_json(const FigureDataset& figure, const QuadratureSpec& spec);
std::string crossing_csv(const CrossingResult& crossing, const QuadratureSpec& spec, int precision);
std::string crossing_json(const CrossingResult& crossing, const QuadratureSpec& spec);
std::string validation_csv(const ValidationReport& report, const QuadratureSpec& spec, int precision);
std::string validation_json(const ValidationReport& report, const QuadratureSpec& spec);

/// Fixed-point with `precision` decimals; never prints a negative zero.
std::string format_fixed(double value, int precision);

/// Entry point behind the executable. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shannon1d::cli
