#pragma once

// Scenario definition files: a single JSON object
//
//   {"scenario": "monopoly",
//    "params": {"S_a": 10, "T_a": 6, ...},
//    "sweep": {"axes": [{"param": "delta", "lo": 0.05, "hi": 0.95,
//                        "steps": 181}]}}
//
// "sweep" is optional. Unknown keys are rejected at every level.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "predation/scenarios.hpp"
#include "predation/sweep.hpp"

namespace predation::cli {

struct ScenarioFile {
  scenarios::ScenarioParams params;
  std::optional<std::vector<sweep::AxisSpec>> sweep;

  scenarios::ScenarioKind kind() const noexcept {
    return scenarios::kind_of(params);
  }
  bool operator==(const ScenarioFile&) const = default;
};

// Throws Error{SyntaxError, UnknownScenario, MissingField, UnknownField,
// NotANumber}. Syntax errors report line and column.
ScenarioFile parse_scenario_file(std::string_view text);

// Inverse of parse_scenario_file; numbers keep full precision.
std::string to_text(const ScenarioFile& file);

// Throws Error{Io}.
std::string read_text_file(const std::string& path);

}  // namespace predation::cli
