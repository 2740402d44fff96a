#pragma once

// Named verification scenarios with pinned expectations, and the custom
// pipeline for user-supplied cover descriptions.

#include "pgzero/bidouble.hpp"
#include "pgzero/plane_geometry.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgzero {

class unknown_scenario : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Check {
  std::string id;
  std::string anchor;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json computed;
  bool pass = false;
};

struct ScenarioReport {
  std::string scenario;
  std::vector<Check> checks;
  std::optional<InvariantReport> invariants;
  /// Extra computed data (provenance, L3, fibre members, ...).
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

struct ScenarioOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t fibre_depth = kDefaultFibreDepth;
};

const std::vector<std::string>& scenario_names();

/// A module exception inside a check is recorded as a failed check whose
/// computed value is {"error": what}.
ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& opts = {});

/// Scenarios run on `jobs` threads, reported in the order given.
std::vector<ScenarioReport> run_scenarios(const std::vector<std::string>& names, const ScenarioOptions& opts,
                                          std::size_t jobs);

/// Parses (parse_error) and validates (relation_failure) before running; no
/// pinned expectations, every check is a self-consistency check.
ScenarioReport run_custom(const nlohmann::json& doc, const ScenarioOptions& opts = {});

nlohmann::ordered_json to_json(const ScenarioReport& r);
/// Rendered from to_json.
std::string to_text(const nlohmann::ordered_json& report);

}  // namespace pgzero
