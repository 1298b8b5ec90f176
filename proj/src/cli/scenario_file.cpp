#include "predation/scenario_file.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "predation/error.hpp"

namespace predation::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_col(std::string_view text,
                                             std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

double number_field(const json& value, const std::string& name) {
  if (!value.is_number()) {
    fail(ErrorCode::NotANumber,
         "field '" + name + "' is not a number: " + value.dump());
  }
  return value.get<double>();
}

sweep::AxisSpec parse_axis(const json& node, std::size_t index) {
  const std::string where = "sweep.axes[" + std::to_string(index) + "]";
  if (!node.is_object()) fail(ErrorCode::SyntaxError, where + " must be an object");
  for (const auto& [key, value] : node.items()) {
    if (key != "param" && key != "lo" && key != "hi" && key != "steps") {
      fail(ErrorCode::UnknownField, "unknown field '" + key + "' in " + where);
    }
  }
  for (const char* key : {"param", "lo", "hi", "steps"}) {
    if (!node.contains(key)) {
      fail(ErrorCode::MissingField,
           "missing field '" + std::string(key) + "' in " + where);
    }
  }
  sweep::AxisSpec axis;
  if (!node["param"].is_string()) {
    fail(ErrorCode::SyntaxError, where + ".param must be a string");
  }
  axis.param_name = node["param"].get<std::string>();
  axis.lo = number_field(node["lo"], "lo");
  axis.hi = number_field(node["hi"], "hi");
  const double steps = number_field(node["steps"], "steps");
  if (!(steps >= 0) || std::floor(steps) != steps || steps > 1e9) {
    fail(ErrorCode::NotANumber,
         "field 'steps' must be a non-negative integer in " + where);
  }
  axis.steps = static_cast<std::size_t>(steps);
  return axis;
}

}  // namespace

ScenarioFile parse_scenario_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream msg;
    msg << "syntax error at line " << line << ", column " << col << ": "
        << e.what();
    fail(ErrorCode::SyntaxError, msg.str());
  }
  if (!doc.is_object()) {
    fail(ErrorCode::SyntaxError, "scenario file must hold a single object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "scenario" && key != "params" && key != "sweep") {
      fail(ErrorCode::UnknownField, "unknown field '" + key + "'");
    }
  }
  if (!doc.contains("scenario")) {
    fail(ErrorCode::MissingField, "missing field 'scenario'");
  }
  if (!doc["scenario"].is_string()) {
    fail(ErrorCode::UnknownScenario,
         "scenario must be a string, got " + doc["scenario"].dump());
  }
  const auto name = doc["scenario"].get<std::string>();
  const auto kind = scenarios::parse_scenario_kind(name);
  if (!kind) {
    fail(ErrorCode::UnknownScenario,
         "unknown scenario '" + name +
             "' (expected sanctions, competition, monopoly or credit)");
  }
  if (!doc.contains("params")) {
    fail(ErrorCode::MissingField, "missing field 'params'");
  }
  const json& params = doc["params"];
  if (!params.is_object()) fail(ErrorCode::SyntaxError, "params must be an object");

  ScenarioFile file{scenarios::make_params(*kind), std::nullopt};
  const auto specs = scenarios::fields(*kind);
  for (const auto& [key, value] : params.items()) {
    bool known = false;
    for (const auto& f : specs) known = known || f.name == key;
    if (!known) {
      fail(ErrorCode::UnknownField,
           "unknown field '" + key + "' for scenario " + name);
    }
  }
  for (const auto& f : specs) {
    const std::string key(f.name);
    if (!params.contains(key)) {
      if (f.optional) continue;
      fail(ErrorCode::MissingField, "missing field '" + key + "'");
    }
    scenarios::set_field(file.params, key, number_field(params[key], key));
  }

  if (doc.contains("sweep")) {
    const json& sw = doc["sweep"];
    if (!sw.is_object()) fail(ErrorCode::SyntaxError, "sweep must be an object");
    for (const auto& [key, value] : sw.items()) {
      if (key != "axes") {
        fail(ErrorCode::UnknownField, "unknown field '" + key + "' in sweep");
      }
    }
    if (!sw.contains("axes")) {
      fail(ErrorCode::MissingField, "missing field 'axes' in sweep");
    }
    if (!sw["axes"].is_array()) {
      fail(ErrorCode::SyntaxError, "sweep.axes must be an array");
    }
    std::vector<sweep::AxisSpec> axes;
    for (std::size_t i = 0; i < sw["axes"].size(); ++i) {
      axes.push_back(parse_axis(sw["axes"][i], i));
    }
    file.sweep = std::move(axes);
  }
  return file;
}

std::string to_text(const ScenarioFile& file) {
  ordered_json doc;
  doc["scenario"] = std::string(scenarios::to_string(file.kind()));
  ordered_json params = ordered_json::object();
  for (const auto& f : scenarios::fields(file.kind())) {
    if (auto v = scenarios::get_field(file.params, f.name)) {
      params[std::string(f.name)] = *v;
    }
  }
  doc["params"] = std::move(params);
  if (file.sweep) {
    ordered_json axes = ordered_json::array();
    for (const auto& axis : *file.sweep) {
      axes.push_back({{"param", axis.param_name},
                      {"lo", axis.lo},
                      {"hi", axis.hi},
                      {"steps", axis.steps}});
    }
    doc["sweep"] = {{"axes", std::move(axes)}};
  }
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorCode::Io, "cannot read '" + path + "'");
  return buf.str();
}

}  // namespace predation::cli
