#include "json.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "parallel.hpp"
#include "reference_data.hpp"
#include "shannon1d/analysis.hpp"

namespace shannon1d {

namespace {

using StateKey = std::tuple<System, int, double>;

System parse_system(const std::string& name) {
  if (name == "oscillator") return System::oscillator;
  if (name == "box") return System::box;
  throw std::invalid_argument("unknown system '" + name + "' in reference values");
}

std::vector<ReferenceValue> load_reference_values() {
  const auto doc = nlohmann::json::parse(detail::reference_values_json);
  std::vector<ReferenceValue> values;
  for (const auto& e : doc.at("entries")) {
    ReferenceValue v;
    v.id = e.at("id").get<std::string>();
    v.source = e.at("source").get<std::string>();
    v.system = e.at("system").get<std::string>();
    v.quantity = e.at("quantity").get<std::string>();
    v.n = e.at("n").get<int>();
    v.parameter = e.at("parameter").get<double>();
    v.value = e.at("value").get<double>();
    v.gating = e.at("gating").get<bool>();
    v.note = e.value("note", "");
    values.push_back(std::move(v));
  }
  return values;
}

bool is_entropy_quantity(const std::string& q) { return q == "sx" || q == "sp" || q == "st"; }
bool is_spread_quantity(const std::string& q) { return q == "dx" || q == "dp" || q == "dxdp"; }
bool is_crossing_quantity(const std::string& q) {
  return q == "crossing_parameter" || q == "crossing_entropy";
}

// The ground-state gap compares these two states.
const StateKey box_ground{System::box, 1, 1.0};
const StateKey oscillator_ground{System::oscillator, 0, 1.0};

}  // namespace

const std::vector<ReferenceValue>& reference_values() {
  static const std::vector<ReferenceValue> values = load_reference_values();
  return values;
}

ValidationReport validate_against_references(const QuadratureSpec& spec, const ValidationOptions& options) {
  if (!(options.tolerance > 0.0)) throw std::domain_error("validation tolerance must be positive");

  std::vector<ReferenceValue> selected;
  for (const ReferenceValue& v : reference_values()) {
    if (!options.only || v.source.rfind(*options.only, 0) == 0) selected.push_back(v);
  }

  std::set<StateKey> entropy_keys;
  std::set<StateKey> spread_keys;
  std::set<std::pair<System, int>> crossing_keys;
  for (const ReferenceValue& v : selected) {
    if (is_entropy_quantity(v.quantity)) entropy_keys.emplace(parse_system(v.system), v.n, v.parameter);
    if (is_spread_quantity(v.quantity)) spread_keys.emplace(parse_system(v.system), v.n, v.parameter);
    if (is_crossing_quantity(v.quantity)) crossing_keys.emplace(parse_system(v.system), v.n);
    if (v.quantity == "st_ground_gap") {
      entropy_keys.insert(box_ground);
      entropy_keys.insert(oscillator_ground);
    }
  }

  const std::vector<StateKey> entropy_list(entropy_keys.begin(), entropy_keys.end());
  const auto entropies = detail::parallel_map<EntropyReport>(entropy_list.size(), [&](std::size_t i) {
    const auto& [system, n, parameter] = entropy_list[i];
    return entropy_sum(make_state(system, n, parameter), spec);
  });
  const std::vector<StateKey> spread_list(spread_keys.begin(), spread_keys.end());
  const auto spreads = detail::parallel_map<UncertaintyReport>(spread_list.size(), [&](std::size_t i) {
    const auto& [system, n, parameter] = spread_list[i];
    return uncertainty(make_state(system, n, parameter), spec);
  });
  const std::vector<std::pair<System, int>> crossing_list(crossing_keys.begin(), crossing_keys.end());
  const auto crossings = detail::parallel_map<CrossingResult>(crossing_list.size(), [&](std::size_t i) {
    const auto& [system, n] = crossing_list[i];
    return find_crossing(system, n, default_crossing_bracket(system), spec);
  });

  std::map<StateKey, EntropyReport> entropy_at;
  for (std::size_t i = 0; i < entropy_list.size(); ++i) entropy_at[entropy_list[i]] = entropies[i];
  std::map<StateKey, UncertaintyReport> spread_at;
  for (std::size_t i = 0; i < spread_list.size(); ++i) spread_at[spread_list[i]] = spreads[i];
  std::map<std::pair<System, int>, CrossingResult> crossing_at;
  for (std::size_t i = 0; i < crossing_list.size(); ++i) crossing_at[crossing_list[i]] = crossings[i];

  ValidationReport report;
  report.tolerance = options.tolerance;
  for (const ReferenceValue& v : selected) {
    double computed = std::nan("");
    if (v.quantity == "st_ground_gap") {
      computed = entropy_at.at(box_ground).st - entropy_at.at(oscillator_ground).st;
    } else {
      const System system = parse_system(v.system);
      const StateKey key{system, v.n, v.parameter};
      if (v.quantity == "sx") computed = entropy_at.at(key).sx;
      else if (v.quantity == "sp") computed = entropy_at.at(key).sp;
      else if (v.quantity == "st") computed = entropy_at.at(key).st;
      else if (v.quantity == "dx") computed = spread_at.at(key).dx;
      else if (v.quantity == "dp") computed = spread_at.at(key).dp;
      else if (v.quantity == "dxdp") computed = spread_at.at(key).product;
      else if (v.quantity == "crossing_parameter") computed = crossing_at.at({system, v.n}).parameter_value;
      else if (v.quantity == "crossing_entropy") computed = crossing_at.at({system, v.n}).entropy_value;
      else throw std::invalid_argument("unknown reference quantity '" + v.quantity + "'");
    }
    ValidationEntry entry{v, computed, std::abs(computed - v.value), false};
    entry.pass = entry.deviation <= options.tolerance;
    if (v.gating && !entry.pass) ++report.gating_failures;
    report.entries.push_back(std::move(entry));
  }
  report.passed = report.gating_failures == 0;
  return report;
}

}  // namespace shannon1d
