#include "cli.hpp"

#include <CLI11.hpp>

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "shannon1d/errors.hpp"

namespace shannon1d::cli {

namespace {

using nlohmann::json;

std::string shortest(double value) { return json(value).dump(); }

json spec_json(const QuadratureSpec& spec) {
  json j;
  j["abs_tolerance"] = spec.abs_tolerance;
  j["max_subdivisions"] = spec.max_subdivisions;
  j["momentum_tail_radius"] =
      spec.momentum_tail_radius ? json(*spec.momentum_tail_radius) : json(nullptr);
  return j;
}

json units_json(const UnitSystem& units) {
  return json{{"a0", units.a0},
              {"hbar", units.hbar},
              {"m", units.m}};
}

std::string envelope_json(const std::string& command, const json& arguments, const UnitSystem& units,
                          const QuadratureSpec& spec, json payload) {
  json doc;
  doc["schema_version"] = schema_version;
  doc["command"] = command;
  doc["arguments"] = arguments;
  doc["units"] = units == atomic_units() ? "atomic" : "custom";
  doc["unit_scales"] = units_json(units);
  doc["spec"] = spec_json(spec);
  doc["payload"] = std::move(payload);
  return doc.dump(2) + "\n";
}

std::string csv_preamble(const std::string& command, const std::string& arguments,
                         const UnitSystem& units, const QuadratureSpec& spec) {
  std::ostringstream out;
  out << "# schema_version: " << schema_version << "\n";
  out << "# command: " << command << "\n";
  if (!arguments.empty()) out << "# arguments: " << arguments << "\n";
  out << "# units: " << (units == atomic_units() ? "atomic" : "custom") << " (a0=" << shortest(units.a0)
      << ", hbar=" << shortest(units.hbar) << ", m=" << shortest(units.m) << ")\n";
  out << "# quadrature: abs_tolerance=" << shortest(spec.abs_tolerance)
      << ", max_subdivisions=" << spec.max_subdivisions << ", momentum_tail_radius="
      << (spec.momentum_tail_radius ? shortest(*spec.momentum_tail_radius) : std::string("auto")) << "\n";
  return out.str();
}

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + shortest(values[i]);
  return out;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
  return out;
}

const char* parameter_name(System system) { return system == System::oscillator ? "omega" : "xc"; }

json entropy_json(const EntropyReport& r) {
  return json{{"sx", r.sx}, {"sp", r.sp}, {"st", r.st}, {"bbm_margin", r.bbm_margin}};
}

json uncertainty_json(const UncertaintyReport& r) {
  return json{{"mean_x", r.mean_x}, {"mean_x2", r.mean_x2}, {"mean_p", r.mean_p},
              {"mean_p2", r.mean_p2}, {"dx", r.dx},           {"dp", r.dp},
              {"product", r.product}, {"kennard_margin", r.kennard_margin}};
}

System parse_system(const std::string& name) {
  return name == "box" ? System::box : System::oscillator;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  file << text;
  if (!file) throw std::runtime_error("failed writing output file " + path);
}

}  // namespace

QuadratureSpec default_spec_from_environment() {
  QuadratureSpec spec;
  if (const char* env = std::getenv(tolerance_env_var); env && *env) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0.0)) {
      throw std::invalid_argument(std::string(tolerance_env_var) + " must be a positive number, got '" +
                                  env + "'");
    }
    spec.abs_tolerance = value;
  }
  return spec;
}

std::string format_fixed(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", precision, value);
  std::string text(buffer);
  if (text.front() == '-' && text.find_first_not_of("-0.") == std::string::npos) text.erase(0, 1);
  return text;
}

std::string state_csv(const QuantumState& state, const EntropyReport& e, const UncertaintyReport& u,
                      const QuadratureSpec& spec, int precision) {
  const System system = system_of(state);
  std::ostringstream out;
  out << csv_preamble("state",
                      std::string(to_string(system)) + " n=" + std::to_string(quantum_number(state)) + " " +
                          parameter_name(system) + "=" + shortest(control_parameter(state)),
                      units_of(state), spec);
  out << "system,n,parameter,energy,sx,sp,st,bbm_margin,mean_x,mean_x2,mean_p,mean_p2,dx,dp,product,"
         "kennard_margin\n";
  out << to_string(system) << "," << quantum_number(state);
  for (double v : {control_parameter(state), energy(state), e.sx, e.sp, e.st, e.bbm_margin, u.mean_x,
                   u.mean_x2, u.mean_p, u.mean_p2, u.dx, u.dp, u.product, u.kennard_margin}) {
    out << "," << format_fixed(v, precision);
  }
  out << "\n";
  return out.str();
}

std::string state_json(const QuantumState& state, const EntropyReport& e, const UncertaintyReport& u,
                       const QuadratureSpec& spec) {
  const System system = system_of(state);
  const json arguments{{"system", to_string(system)},
                       {"n", quantum_number(state)},
                       {parameter_name(system), control_parameter(state)}};
  json payload{{"system", to_string(system)},
               {"n", quantum_number(state)},
               {"parameter", control_parameter(state)},
               {"energy", energy(state)},
               {"entropy", entropy_json(e)},
               {"uncertainty", uncertainty_json(u)}};
  return envelope_json("state", arguments, units_of(state), spec, std::move(payload));
}

std::string table_csv(int table_id, const TableArtifact& table, int precision) {
  std::vector<double> grid;
  for (const auto& row : table.rows) grid.push_back(row.parameter);
  std::ostringstream out;
  out << csv_preamble("table " + std::to_string(table_id),
                      "system=" + std::string(to_string(table.system)) + " grid=" + join_numbers(grid) +
                          " n=" + join_ints(table.n_values),
                      table.units, table.spec);
  out << parameter_name(table.system);
  for (const char* q : {"sx", "sp", "st"}) {
    for (int n : table.n_values) out << "," << q << "_n" << n;
  }
  out << "\n";
  for (const auto& row : table.rows) {
    out << format_fixed(row.parameter, precision);
    for (double EntropyReport::*field : {&EntropyReport::sx, &EntropyReport::sp, &EntropyReport::st}) {
      for (const auto& entry : row.entries) out << "," << format_fixed(entry.*field, precision);
    }
    out << "\n";
  }
  return out.str();
}

std::string table_json(int table_id, const TableArtifact& table) {
  std::vector<double> grid;
  json rows = json::array();
  for (const auto& row : table.rows) {
    grid.push_back(row.parameter);
    json entries = json::array();
    for (std::size_t j = 0; j < row.entries.size(); ++j) {
      json e = entropy_json(row.entries[j]);
      e["n"] = table.n_values[j];
      entries.push_back(std::move(e));
    }
    rows.push_back(json{{"parameter", row.parameter}, {"entries", std::move(entries)}});
  }
  const json arguments{{"table", table_id}, {"grid", grid}, {"n", table.n_values}};
  json payload{{"system", to_string(table.system)},
               {"parameter_name", parameter_name(table.system)},
               {"n_values", table.n_values},
               {"rows", std::move(rows)}};
  return envelope_json("table", arguments, table.units, table.spec, std::move(payload));
}

std::string figure_csv(const FigureDataset& figure, const QuadratureSpec& spec, int precision) {
  std::ostringstream out;
  out << csv_preamble("figure " + std::to_string(figure.figure_id), "title=" + figure.title, atomic_units(),
                      spec);
  out << "series,x_label,y_label,x,y\n";
  for (const auto& s : figure.series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      out << s.name << "," << s.x_label << "," << s.y_label << "," << format_fixed(s.x[i], precision) << ","
          << format_fixed(s.y[i], precision) << "\n";
    }
  }
  return out.str();
}

std::string figure_json(const FigureDataset& figure, const QuadratureSpec& spec) {
  json series = json::array();
  for (const auto& s : figure.series) {
    series.push_back(json{{"name", s.name}, {"x_label", s.x_label}, {"y_label", s.y_label},
                          {"x", s.x},       {"y", s.y}});
  }
  json payload{{"figure_id", figure.figure_id}, {"title", figure.title}, {"series", std::move(series)}};
  return envelope_json("figure", json{{"figure", figure.figure_id}}, atomic_units(), spec, std::move(payload));
}

std::string crossing_csv(const CrossingResult& c, const QuadratureSpec& spec, int precision) {
  std::ostringstream out;
  out << csv_preamble("crossing",
                      std::string(to_string(c.system)) + " n=" + std::to_string(c.n) +
                          " bracket=" + shortest(c.bracket.first) + " " + shortest(c.bracket.second),
                      atomic_units(), spec);
  out << "system,n," << parameter_name(c.system) << ",entropy,residual\n";
  out << to_string(c.system) << "," << c.n << "," << format_fixed(c.parameter_value, precision) << ","
      << format_fixed(c.entropy_value, precision) << "," << shortest(c.residual) << "\n";
  return out.str();
}

std::string crossing_json(const CrossingResult& c, const QuadratureSpec& spec) {
  const json arguments{{"system", to_string(c.system)},
                       {"n", c.n},
                       {"bracket", {c.bracket.first, c.bracket.second}}};
  json payload{{"system", to_string(c.system)},   {"n", c.n},
               {"parameter_value", c.parameter_value}, {"entropy_value", c.entropy_value},
               {"residual", c.residual},          {"bracket", {c.bracket.first, c.bracket.second}}};
  return envelope_json("crossing", arguments, atomic_units(), spec, std::move(payload));
}

std::string validation_csv(const ValidationReport& report, const QuadratureSpec& spec, int precision) {
  std::ostringstream out;
  out << csv_preamble("validate", "tolerance=" + shortest(report.tolerance), atomic_units(), spec);
  out << "id,source,quantity,system,n,parameter,expected,computed,deviation,gating,status\n";
  int gating = 0;
  for (const auto& e : report.entries) {
    const auto& r = e.reference;
    if (r.gating) ++gating;
    char deviation[32];
    std::snprintf(deviation, sizeof deviation, "%.3e", e.deviation);
    out << r.id << "," << r.source << "," << r.quantity << "," << r.system << "," << r.n << ","
        << shortest(r.parameter) << "," << shortest(r.value) << "," << format_fixed(e.computed, precision)
        << "," << deviation << "," << (r.gating ? "yes" : "no") << "," << (e.pass ? "PASS" : "FAIL") << "\n";
  }
  out << "# summary: " << (report.passed ? "PASS" : "FAIL") << " " << gating - report.gating_failures << "/"
      << gating << " gating values within " << shortest(report.tolerance) << "\n";
  return out.str();
}

std::string validation_json(const ValidationReport& report, const QuadratureSpec& spec) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    const auto& r = e.reference;
    json j{{"id", r.id},          {"source", r.source},     {"quantity", r.quantity}, {"system", r.system},
           {"n", r.n},            {"parameter", r.parameter}, {"expected", r.value},    {"computed", e.computed},
           {"deviation", e.deviation}, {"gating", r.gating},  {"pass", e.pass}};
    if (!r.note.empty()) j["note"] = r.note;
    entries.push_back(std::move(j));
  }
  json payload{{"passed", report.passed},
               {"gating_failures", report.gating_failures},
               {"tolerance", report.tolerance},
               {"entries", std::move(entries)}};
  return envelope_json("validate", json{{"tolerance", report.tolerance}}, atomic_units(), spec,
                       std::move(payload));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shannon entropies, entropy sums and uncertainty products for 1D quantum states"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  int precision = 4;
  double tolerance = 0.0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "Write to this file instead of stdout");
    sub->add_option("--precision", precision, "Decimals in CSV output")->check(CLI::Range(0, 17));
  };

  std::string system_name;
  int n = -1;
  double omega = 0.0;
  double xc = 0.0;
  auto* state = app.add_subcommand("state", "Entropy and uncertainty report for one state");
  state->add_option("system", system_name, "ho | oscillator | box")
      ->required()
      ->check(CLI::IsMember({"ho", "oscillator", "box"}));
  state->add_option("--n", n, "Quantum number")->required()->check(CLI::NonNegativeNumber);
  auto* omega_opt = state->add_option("--omega", omega, "Angular frequency (a.u.)")->check(CLI::PositiveNumber);
  auto* xc_opt = state->add_option("--xc", xc, "Box width (a.u.)")->check(CLI::PositiveNumber);
  omega_opt->excludes(xc_opt);
  state->add_option("--tolerance", tolerance, "Quadrature absolute tolerance")->check(CLI::PositiveNumber);
  add_common(state);

  int table_id = 0;
  std::vector<double> grid;
  std::vector<int> n_list;
  auto* table = app.add_subcommand("table", "Reproduce the oscillator (1) or box (2) entropy table");
  table->add_option("table_id", table_id, "1 = oscillator, 2 = box")->required()->check(CLI::IsMember({1, 2}));
  table->add_option("--grid", grid, "Override the parameter grid")->check(CLI::PositiveNumber);
  table->add_option("--n", n_list, "Override the quantum numbers");
  table->add_option("--tolerance", tolerance, "Quadrature absolute tolerance")->check(CLI::PositiveNumber);
  add_common(table);

  int figure_id = 0;
  auto* figure = app.add_subcommand("figure", "Plot data for figures 2 through 8");
  figure->add_option("figure_id", figure_id, "Figure number")->required()->check(CLI::Range(2, 8));
  figure->add_option("--tolerance", tolerance, "Quadrature absolute tolerance")->check(CLI::PositiveNumber);
  add_common(figure);

  std::vector<double> bracket;
  auto* crossing = app.add_subcommand("crossing", "Parameter where Sx = Sp");
  crossing->add_option("system", system_name, "ho | oscillator | box")
      ->required()
      ->check(CLI::IsMember({"ho", "oscillator", "box"}));
  crossing->add_option("--n", n, "Quantum number")->required()->check(CLI::NonNegativeNumber);
  crossing->add_option("--bracket", bracket, "Search interval lo hi")->expected(2);
  crossing->add_option("--tolerance", tolerance, "Quadrature absolute tolerance")->check(CLI::PositiveNumber);
  add_common(crossing);

  double validate_tolerance = 5e-4;
  std::string only;
  auto* validate = app.add_subcommand("validate", "Compare against the bundled reference values");
  validate->add_option("--tolerance", validate_tolerance, "Comparison tolerance")->check(CLI::PositiveNumber);
  validate->add_option("--only", only, "Keep sources with this prefix (table1, table2, text, crossing)");
  add_common(validate);

  std::vector<std::string> argv_storage{"shannon1d"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_success;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return exit_usage;
  }

  try {
    QuadratureSpec spec = default_spec_from_environment();
    if (tolerance > 0.0) spec.abs_tolerance = tolerance;
    const Format fmt = format == "json" ? Format::json : Format::csv;

    if (state->parsed()) {
      const System system = parse_system(system_name);
      const bool have_omega = omega_opt->count() > 0;
      const bool have_xc = xc_opt->count() > 0;
      if (system == System::oscillator && !have_omega) throw CLI::ValidationError("--omega", "required for ho");
      if (system == System::box && !have_xc) throw CLI::ValidationError("--xc", "required for box");
      if (system == System::oscillator && have_xc) throw CLI::ValidationError("--xc", "not valid for ho");
      if (system == System::box && have_omega) throw CLI::ValidationError("--omega", "not valid for box");
      const QuantumState s = make_state(system, n, system == System::oscillator ? omega : xc);
      const EntropyReport e = entropy_sum(s, spec);
      const UncertaintyReport u = uncertainty(s, spec);
      emit(fmt == Format::json ? state_json(s, e, u, spec) : state_csv(s, e, u, spec, precision), out_path, out);
    } else if (table->parsed()) {
      const System system = table_id == 1 ? System::oscillator : System::box;
      if (grid.empty()) grid = table_id == 1 ? oscillator_table_grid() : box_table_grid();
      if (n_list.empty()) n_list = default_quantum_numbers(system);
      const TableArtifact t = generate_table(system, grid, n_list, spec);
      emit(fmt == Format::json ? table_json(table_id, t) : table_csv(table_id, t, precision), out_path, out);
    } else if (figure->parsed()) {
      const FigureDataset f = figure_data(figure_id, spec);
      emit(fmt == Format::json ? figure_json(f, spec) : figure_csv(f, spec, precision), out_path, out);
    } else if (crossing->parsed()) {
      const System system = parse_system(system_name);
      const auto range = bracket.size() == 2 ? std::pair{bracket[0], bracket[1]} : default_crossing_bracket(system);
      const CrossingResult c = find_crossing(system, n, range, spec);
      emit(fmt == Format::json ? crossing_json(c, spec) : crossing_csv(c, spec, precision), out_path, out);
    } else if (validate->parsed()) {
      ValidationOptions options;
      options.tolerance = validate_tolerance;
      if (!only.empty()) options.only = only;
      const ValidationReport report = validate_against_references(spec, options);
      if (report.entries.empty()) throw CLI::ValidationError("--only", "no reference values match '" + only + "'");
      emit(fmt == Format::json ? validation_json(report, spec) : validation_csv(report, spec, precision), out_path,
           out);
      if (!report.passed) {
        err << "validation failed: " << report.gating_failures << " value(s) outside " << report.tolerance << "\n";
        return exit_validation;
      }
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ConvergenceError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return exit_numeric;
  } catch (const InvariantViolation& e) {
    err << "numeric failure: " << e.what() << "\n";
    return exit_numeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_success;
}

}  // namespace shannon1d::cli
