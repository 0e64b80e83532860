#include <gtest/gtest.h>

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "shannon1d/entropy.hpp"

using namespace shannon1d;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST(Cli, StateOscillator) {
  const Result r = run_cli({"state", "ho", "--n", "0", "--omega", "1"});
  ASSERT_EQ(r.code, cli::exit_success) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].substr(0, 30), "system,n,parameter,energy,sx,s");
  EXPECT_NE(lines[1].find("1.0724,1.0724,2.1447"), std::string::npos);
  EXPECT_NE(r.out.find("# schema_version: 1.0"), std::string::npos);
}

TEST(Cli, StateBox) {
  const Result r = run_cli({"state", "box", "--n", "1", "--xc", "0.5"});
  ASSERT_EQ(r.code, cli::exit_success) << r.err;
  EXPECT_NE(data_lines(r.out)[1].find("-1.0000,3.2120"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"state", "ho", "--n", "0", "--omega", "-1"}).code, cli::exit_usage);
  EXPECT_EQ(run_cli({"state", "ho", "--n", "0"}).code, cli::exit_usage);
  EXPECT_EQ(run_cli({"state", "box", "--n", "0", "--xc", "1"}).code, cli::exit_usage);
  EXPECT_EQ(run_cli({"state", "ho", "--n", "0", "--omega", "1", "--xc", "1"}).code, cli::exit_usage);
  EXPECT_EQ(run_cli({"state", "well", "--n", "1", "--xc", "1"}).code, cli::exit_usage);
  EXPECT_EQ(run_cli({"figure", "9"}).code, cli::exit_usage);
  EXPECT_EQ(run_cli({"table", "3"}).code, cli::exit_usage);
  EXPECT_EQ(run_cli({"table", "1", "--format", "xml"}).code, cli::exit_usage);
  EXPECT_EQ(run_cli({}).code, cli::exit_usage);
  EXPECT_EQ(run_cli({"crossing", "ho", "--n", "0", "--bracket", "2", "4"}).code, cli::exit_usage);
}

TEST(Cli, NumericFailureHasDistinctExitCode) {
  const Result r = run_cli({"state", "box", "--n", "3", "--xc", "0.1", "--tolerance", "1e-300"});
  EXPECT_EQ(r.code, cli::exit_numeric);
  EXPECT_NE(r.err.find("achieved error"), std::string::npos) << r.err;
}

TEST(Cli, TableSingleRowOverride) {
  const Result r = run_cli({"table", "1", "--grid", "1.0"});
  ASSERT_EQ(r.code, cli::exit_success) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "omega,sx_n0,sx_n1,sx_n2,sp_n0,sp_n1,sp_n2,st_n0,st_n1,st_n2");
  EXPECT_EQ(lines[1], "1.0000,1.0724,1.3427,1.4986,1.0724,1.3427,1.4986,2.1447,2.6855,2.9972");
}

TEST(Cli, PrecisionOverride) {
  const Result r = run_cli({"table", "1", "--grid", "1.0", "--n", "0", "--precision", "8"});
  ASSERT_EQ(r.code, cli::exit_success) << r.err;
  EXPECT_EQ(data_lines(r.out)[1], "1.00000000,1.07236494,1.07236494,2.14472989");
}

TEST(Cli, TableJsonRoundTrip) {
  const Result r = run_cli({"table", "2", "--format", "json", "--grid", "0.5", "6"});
  ASSERT_EQ(r.code, cli::exit_success) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], "1.0");
  EXPECT_EQ(doc["command"], "table");
  EXPECT_EQ(doc["units"], "atomic");
  EXPECT_EQ(doc["spec"]["abs_tolerance"].get<double>(), QuadratureSpec{}.abs_tolerance);
  const auto& rows = doc["payload"]["rows"];
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) {
    const double xc = row["parameter"].get<double>();
    for (const auto& entry : row["entries"]) {
      const EntropyReport direct = entropy_sum(make_state(System::box, entry["n"].get<int>(), xc), {});
      EXPECT_EQ(entry["sx"].get<double>(), direct.sx);
      EXPECT_EQ(entry["sp"].get<double>(), direct.sp);
      EXPECT_EQ(entry["st"].get<double>(), direct.st);
    }
  }
}

TEST(Cli, StateJsonRoundTrip) {
  const Result r = run_cli({"state", "ho", "--n", "2", "--omega", "0.4", "--format", "json"});
  ASSERT_EQ(r.code, cli::exit_success) << r.err;
  const json doc = json::parse(r.out);
  const QuantumState s = make_state(System::oscillator, 2, 0.4);
  const UncertaintyReport u = uncertainty(s, {});
  EXPECT_EQ(doc["payload"]["uncertainty"]["dx"].get<double>(), u.dx);
  EXPECT_EQ(doc["payload"]["entropy"]["st"].get<double>(), entropy_sum(s, {}).st);
  EXPECT_EQ(doc["arguments"]["omega"].get<double>(), 0.4);
}

TEST(Cli, OutputFileMatchesStdout) {
  const auto path = std::filesystem::temp_directory_path() / "shannon1d_cli_out.csv";
  const Result to_file = run_cli({"state", "box", "--n", "2", "--xc", "3", "--out", path.string()});
  ASSERT_EQ(to_file.code, cli::exit_success);
  EXPECT_TRUE(to_file.out.empty());
  EXPECT_EQ(read_file(path), run_cli({"state", "box", "--n", "2", "--xc", "3"}).out);
  std::filesystem::remove(path);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"figure", "4", "--format", "json"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, FigureFiveHasThreeSeries) {
  const Result r = run_cli({"figure", "5", "--format", "json"});
  ASSERT_EQ(r.code, cli::exit_success);
  EXPECT_EQ(json::parse(r.out)["payload"]["series"].size(), 3u);
}

TEST(Cli, Crossing) {
  const Result r = run_cli({"crossing", "ho", "--n", "2"});
  ASSERT_EQ(r.code, cli::exit_success) << r.err;
  EXPECT_EQ(data_lines(r.out)[1].substr(0, 27), "oscillator,2,1.0000,1.4986,");
}

TEST(Cli, ValidateExitCodes) {
  const Result ok = run_cli({"validate", "--only", "text"});
  EXPECT_EQ(ok.code, cli::exit_success) << ok.err;
  EXPECT_NE(ok.out.find("# summary: PASS"), std::string::npos);
  const Result strict = run_cli({"validate", "--only", "table1", "--tolerance", "1e-9"});
  EXPECT_EQ(strict.code, cli::exit_validation);
  EXPECT_NE(strict.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run_cli({"validate", "--only", "nothing"}).code, cli::exit_usage);
}

TEST(Cli, ToleranceFromEnvironment) {
  ::setenv(cli::tolerance_env_var, "1e-11", 1);
  EXPECT_EQ(cli::default_spec_from_environment().abs_tolerance, 1e-11);
  ::setenv(cli::tolerance_env_var, "abc", 1);
  EXPECT_THROW(cli::default_spec_from_environment(), std::invalid_argument);
  EXPECT_EQ(run_cli({"state", "ho", "--n", "0", "--omega", "1"}).code, cli::exit_usage);
  ::unsetenv(cli::tolerance_env_var);
  EXPECT_EQ(cli::default_spec_from_environment().abs_tolerance, QuadratureSpec{}.abs_tolerance);
}

TEST(Cli, FormatFixed) {
  EXPECT_EQ(cli::format_fixed(-0.00001, 4), "0.0000");
  EXPECT_EQ(cli::format_fixed(-0.0, 2), "0.00");
  EXPECT_EQ(cli::format_fixed(-1.23456, 4), "-1.2346");
}

TEST(Cli, GoldenTables) {
  const std::filesystem::path golden = SHANNON1D_GOLDEN_DIR;
  EXPECT_EQ(run_cli({"table", "1"}).out, read_file(golden / "table1.csv"));
  EXPECT_EQ(run_cli({"table", "2"}).out, read_file(golden / "table2.csv"));
}
