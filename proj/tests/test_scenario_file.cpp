#include <doctest.h>

#include <string>

#include "predation/error.hpp"
#include "predation/scenario_file.hpp"
#include "support/generators.hpp"

using namespace predation;
using cli::parse_scenario_file;
using cli::ScenarioFile;

namespace {

const char* kMonopoly =
    R"({"scenario":"monopoly","params":{"S_a":10,"T_a":6,"s_a":2,"E_a":1,)"
    R"("E_h":5,"h_h":1,"H_h":4,"delta":0.6}})";

Error error_of(std::string_view text) {
  try {
    parse_scenario_file(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an Error");
  return Error(ErrorCode::Io, "");
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("parse the monopoly example") {
  const auto file = parse_scenario_file(kMonopoly);
  CHECK(file.kind() == scenarios::ScenarioKind::Monopoly);
  CHECK(std::get<scenarios::MonopolyParams>(file.params) ==
        testing::reference_monopoly(0.6));
  CHECK_FALSE(file.sweep.has_value());
}

TEST_CASE("field and scenario errors name the culprit") {
  auto e = error_of(replace(kMonopoly, R"(,"delta":0.6)", ""));
  CHECK(e.code() == ErrorCode::MissingField);
  CHECK(std::string(e.what()).find("delta") != std::string::npos);

  e = error_of(replace(kMonopoly, "monopoly", "banditry"));
  CHECK(e.code() == ErrorCode::UnknownScenario);

  e = error_of(replace(kMonopoly, R"("delta":0.6)", R"("delta":0.6,"beta":0.2)"));
  CHECK(e.code() == ErrorCode::UnknownField);
  CHECK(std::string(e.what()).find("beta") != std::string::npos);

  e = error_of(replace(kMonopoly, R"("T_a":6)", R"("T_a":"six")"));
  CHECK(e.code() == ErrorCode::NotANumber);
  CHECK(std::string(e.what()).find("T_a") != std::string::npos);

  e = error_of(replace(kMonopoly, R"("scenario")", R"("extra":1,"scenario")"));
  CHECK(e.code() == ErrorCode::UnknownField);

  CHECK(error_of(R"({"params":{}})").code() == ErrorCode::MissingField);
  CHECK(error_of(R"([1,2])").code() == ErrorCode::SyntaxError);
}

TEST_CASE("syntax errors report a position") {
  const auto e = error_of("{\n  \"scenario\": \"monopoly\",\n  \"params\": {\"S_a\": 10,,}\n}");
  CHECK(e.code() == ErrorCode::SyntaxError);
  const std::string what = e.what();
  CHECK(what.find("line 3") != std::string::npos);
  CHECK(what.find("column") != std::string::npos);
}

TEST_CASE("optional monopoly reporting discount") {
  const auto file = parse_scenario_file(
      replace(kMonopoly, R"("delta":0.6)", R"("delta":0.6,"delta_h":0.3)"));
  CHECK(std::get<scenarios::MonopolyParams>(file.params).delta_h_report == 0.3);
}

TEST_CASE("sweep block") {
  const auto file = parse_scenario_file(replace(
      kMonopoly, "}}",
      R"(},"sweep":{"axes":[{"param":"delta","lo":0.05,"hi":0.95,"steps":181}]}})"));
  REQUIRE(file.sweep);
  REQUIRE(file.sweep->size() == 1);
  CHECK((*file.sweep)[0] == sweep::AxisSpec{"delta", 0.05, 0.95, 181});

  auto e = error_of(replace(
      kMonopoly, "}}",
      R"(},"sweep":{"axes":[{"param":"delta","lo":0.05,"hi":0.95,"steps":2.5}]}})"));
  CHECK(e.code() == ErrorCode::NotANumber);
  e = error_of(replace(
      kMonopoly, "}}",
      R"(},"sweep":{"axes":[{"param":"delta","lo":0.05,"hi":0.95}]}})"));
  CHECK(e.code() == ErrorCode::MissingField);
  e = error_of(replace(
      kMonopoly, "}}",
      R"(},"sweep":{"axes":[{"param":"delta","lo":0.05,"hi":0.95,"steps":3,"log":true}]}})"));
  CHECK(e.code() == ErrorCode::UnknownField);
}

TEST_CASE("bundled scenario files parse") {
  for (const char* name :
       {"sanctions", "competition", "monopoly", "credit", "monopoly_delta_sweep",
        "credit_beta_sweep", "competition_phase_grid"}) {
    const auto path = testing::source_path(std::string("scenarios/") + name + ".json");
    CHECK_NOTHROW(parse_scenario_file(cli::read_text_file(path)));
  }
  CHECK_THROWS_AS(cli::read_text_file("/nonexistent/file.json"), Error);
}

TEST_CASE("property: text round trip preserves every field") {
  testing::Draws draws(0xf11e01);
  for (int trial = 0; trial < 500; ++trial) {
    ScenarioFile file;
    switch (trial % 4) {
      case 0: file.params = draws.sanctions(); break;
      case 1: file.params = draws.competition(); break;
      case 2: file.params = draws.monopoly(); break;
      default: file.params = draws.credit(); break;
    }
    if (draws.coin()) {
      std::vector<sweep::AxisSpec> axes{
          {"E_a", draws.uniform(-1, 0), draws.uniform(0, 1),
           static_cast<std::size_t>(draws.integer(2, 300))}};
      if (draws.coin()) axes.push_back({"E_h", 0.125, 3.0 / 7.0, 9});
      file.sweep = axes;
    }
    CHECK(parse_scenario_file(cli::to_text(file)) == file);
  }
}
