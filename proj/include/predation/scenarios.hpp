#pragma once

// The four predator-versus-producer games: parameter records with their
// ordering assumptions, game-tree construction for the one-shot games, and
// closed-form equilibrium classification.
//
// Harm and cost parameters (P_a, C_h, H_h, h_h, f_h) are magnitudes; the
// corresponding payoffs are their negations.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "predation/game_tree.hpp"
#include "predation/kernels.hpp"

namespace predation::scenarios {

enum class ScenarioKind { Sanctions, Competition, Monopoly, Credit };

std::string_view to_string(ScenarioKind kind) noexcept;
std::optional<ScenarioKind> parse_scenario_kind(std::string_view name);
bool is_repeated(ScenarioKind kind) noexcept;

struct SanctionsParams {
  double S_a = 0, E_a = 0, P_a = 0;
  double E_h = 0, C_h = 0, H_h = 0;
  bool operator==(const SanctionsParams&) const = default;
};

struct CompetitionParams {
  double S_a = 0, T_a = 0, s_a = 0, E_a = 0;
  double E_h = 0, h_h = 0, f_h = 0, C_h = 0, H_h = 0;
  double delta_a = 0, delta_h = 0;
  bool operator==(const CompetitionParams&) const = default;
};

struct MonopolyParams {
  double S_a = 0, T_a = 0, s_a = 0, E_a = 0;
  double E_h = 0, h_h = 0, H_h = 0;
  double delta = 0;
  // Only scales the reported human PDV; defaults to `delta`.
  std::optional<double> delta_h_report;

  double human_discount() const noexcept {
    return delta_h_report.value_or(delta);
  }
  bool operator==(const MonopolyParams&) const = default;
};

struct CreditParams {
  double S_a = 0, E_a = 0, I_a = 0, s_a = 0;
  double E_h = 0, I_h = 0, i_h = 0, h_h = 0, H_h = 0;
  double beta = 0;
  bool operator==(const CreditParams&) const = default;
};

using ScenarioParams = std::variant<SanctionsParams, CompetitionParams,
                                    MonopolyParams, CreditParams>;

ScenarioKind kind_of(const ScenarioParams& params) noexcept;

// Named numeric fields, in canonical order. Names match the scenario file
// keys; for monopoly the optional human reporting discount is "delta_h".
struct FieldSpec {
  std::string_view name;
  bool optional = false;
};
std::span<const FieldSpec> fields(ScenarioKind kind) noexcept;

// Empty when the field is unknown or an unset optional.
std::optional<double> get_field(const ScenarioParams& params,
                                std::string_view name);
// Returns false when `name` is not a field of this scenario.
bool set_field(ScenarioParams& params, std::string_view name, double value);

ScenarioParams make_params(ScenarioKind kind);

struct Violation {
  std::string constraint;  // e.g. "S_a > T_a"
  double lhs = 0;
  double rhs = 0;
  std::string describe() const;
  bool operator==(const Violation&) const = default;
};

std::vector<Violation> validate(const SanctionsParams& p);
std::vector<Violation> validate(const CompetitionParams& p);
std::vector<Violation> validate(const MonopolyParams& p);
std::vector<Violation> validate(const CreditParams& p);
std::vector<Violation> validate(const ScenarioParams& p);

enum class OutcomeLabel {
  Trade,
  StealUnsanctioned,
  Skim,
  StealThenFlight,
  Tax,
  StealThenSubsist,
  CreditTrade,
  Ignore,
};
std::string_view to_string(OutcomeLabel label) noexcept;
std::span<const OutcomeLabel> reachable_labels(ScenarioKind kind) noexcept;

enum class ValueKind { OneShot, PDV };
std::string_view to_string(ValueKind kind) noexcept;

// One equilibrium-path move. `periods` is "once" for one-shot games, or
// "t=0", "t>=1", "t>=0" in the repeated games.
struct PeriodAction {
  std::string periods;
  game::PlayerId player;
  std::string action;
  bool operator==(const PeriodAction&) const = default;
};

struct Outcome {
  OutcomeLabel label = OutcomeLabel::Trade;
  std::vector<PeriodAction> path;
  double asi_value = 0;
  double human_value = 0;
  ValueKind value_kind = ValueKind::OneShot;
  bool operator==(const Outcome&) const = default;
};

namespace action {
inline constexpr std::string_view kTrade = "trade";
inline constexpr std::string_view kSteal = "steal";
inline constexpr std::string_view kSkim = "skim";
inline constexpr std::string_view kTax = "tax";
inline constexpr std::string_view kIgnore = "ignore";
inline constexpr std::string_view kNothing = "nothing";
inline constexpr std::string_view kSanction = "sanction";
inline constexpr std::string_view kFlee = "flee";
inline constexpr std::string_view kFled = "fled";
inline constexpr std::string_view kInaction = "inaction";
inline constexpr std::string_view kProduceForTrade = "produce_for_trade";
inline constexpr std::string_view kProduceForSubsistence =
    "produce_for_subsistence";
inline constexpr std::string_view kKeep = "keep";
inline constexpr std::string_view kBreak = "break";
}  // namespace action

// Throw Error{InvalidParams} when validation fails. Cooperative actions are
// declared first at every node so exact ties resolve cooperatively.
game::GameNode build_game_tree(const SanctionsParams& p);
game::GameNode build_game_tree(const CreditParams& p);

// Each throws Error{InvalidParams} when validation fails.
Outcome classify_sanctions(const SanctionsParams& p);
Outcome classify_competition(const CompetitionParams& p);
Outcome classify_monopoly(const MonopolyParams& p);
Outcome classify_credit(const CreditParams& p);
Outcome classify(const ScenarioParams& p);

// The parameter that decides the outcome, its critical value, and which side
// of it the input sits on.
struct Threshold {
  std::string parameter;  // "C_h", "delta_a", "delta" or "beta"
  double value = 0;
  double critical = 0;
  std::string relation;  // relation that selects the cooperative outcome
  bool cooperative = false;
};
Threshold threshold(const ScenarioParams& p);

// Name of the ASI discount field ("delta_a" or "delta") for the repeated
// scenarios; empty otherwise.
std::string_view asi_discount_field(ScenarioKind kind) noexcept;

// Classification of a line of parameter points that differ only in the ASI
// discount factor, evaluated with the batch kernels. `base` must be a
// competition or monopoly record. Cells whose discount leaves (0, 1), or
// whose other fields fail validation, come back without a label.
struct LineCell {
  std::optional<OutcomeLabel> label;
  double asi_value = 0;
  double human_value = 0;
};
std::vector<LineCell> classify_discount_line(
    const ScenarioParams& base, std::span<const double> deltas,
    const kernels::KernelSet& kernels = kernels::active_kernels());

}  // namespace predation::scenarios
