#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pqwpa/algo_registry.hpp"
#include "pqwpa/sim.hpp"

namespace pqwpa {

// Resolved contents of a scenario file.
struct ScenarioSet {
  std::vector<Scenario> scenarios;
  ClassicalConstants constants;
};

// YAML document. Top-level scenario keys act as defaults for the
// `scenarios:` list and the `matrix:` block; when neither is present the
// top level is itself the single scenario. Unknown keys are rejected.
// `key = value` lines are read as `key: value`.
// Throws ParseError (with line and key) or UnknownAlgorithm.
ScenarioSet parse_scenario_text(const std::string& text);
ScenarioSet parse_scenario_file(const std::filesystem::path& path);

std::vector<Scenario> parse_scenario(const std::filesystem::path& path);

// Fully explicit document that parses back to the same scenarios.
std::string emit_scenario_file(const ScenarioSet& set);

// Every accepted key with its default and meaning.
std::string scenario_reference();

}  // namespace pqwpa
