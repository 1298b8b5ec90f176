#include "predation/scenarios.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "predation/error.hpp"
#include "predation/repeated.hpp"

namespace predation::scenarios {

using game::GameNode;
using game::kAsi;
using game::kHumans;
using repeated::DiscountFactor;
using repeated::PayoffStream;

namespace {

// The fault-injection test build flips every cooperative/predatory decision
// so that the verification path has something to catch.
#ifdef PREDATION_FAULT_FLIP_CLASSIFIER
constexpr bool kFlipDecisions = true;
#else
constexpr bool kFlipDecisions = false;
#endif

bool decide(bool cooperative) { return cooperative != kFlipDecisions; }

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class P>
struct Field {
  std::string_view name;
  double P::*member;
};

constexpr Field<SanctionsParams> kSanctionsFields[] = {
    {"S_a", &SanctionsParams::S_a}, {"E_a", &SanctionsParams::E_a},
    {"P_a", &SanctionsParams::P_a}, {"E_h", &SanctionsParams::E_h},
    {"C_h", &SanctionsParams::C_h}, {"H_h", &SanctionsParams::H_h},
};

constexpr Field<CompetitionParams> kCompetitionFields[] = {
    {"S_a", &CompetitionParams::S_a},
    {"T_a", &CompetitionParams::T_a},
    {"s_a", &CompetitionParams::s_a},
    {"E_a", &CompetitionParams::E_a},
    {"E_h", &CompetitionParams::E_h},
    {"h_h", &CompetitionParams::h_h},
    {"f_h", &CompetitionParams::f_h},
    {"C_h", &CompetitionParams::C_h},
    {"H_h", &CompetitionParams::H_h},
    {"delta_a", &CompetitionParams::delta_a},
    {"delta_h", &CompetitionParams::delta_h},
};

constexpr Field<MonopolyParams> kMonopolyFields[] = {
    {"S_a", &MonopolyParams::S_a}, {"T_a", &MonopolyParams::T_a},
    {"s_a", &MonopolyParams::s_a}, {"E_a", &MonopolyParams::E_a},
    {"E_h", &MonopolyParams::E_h}, {"h_h", &MonopolyParams::h_h},
    {"H_h", &MonopolyParams::H_h}, {"delta", &MonopolyParams::delta},
};
constexpr std::string_view kMonopolyHumanDiscount = "delta_h";

constexpr Field<CreditParams> kCreditFields[] = {
    {"S_a", &CreditParams::S_a}, {"E_a", &CreditParams::E_a},
    {"I_a", &CreditParams::I_a}, {"s_a", &CreditParams::s_a},
    {"E_h", &CreditParams::E_h}, {"I_h", &CreditParams::I_h},
    {"i_h", &CreditParams::i_h}, {"h_h", &CreditParams::h_h},
    {"H_h", &CreditParams::H_h}, {"beta", &CreditParams::beta},
};

constexpr FieldSpec kSanctionsSpecs[] = {{"S_a"}, {"E_a"}, {"P_a"},
                                         {"E_h"}, {"C_h"}, {"H_h"}};
constexpr FieldSpec kCompetitionSpecs[] = {
    {"S_a"}, {"T_a"}, {"s_a"}, {"E_a"},     {"E_h"},    {"h_h"},
    {"f_h"}, {"C_h"}, {"H_h"}, {"delta_a"}, {"delta_h"}};
constexpr FieldSpec kMonopolySpecs[] = {
    {"S_a"}, {"T_a"}, {"s_a"}, {"E_a"},           {"E_h"},
    {"h_h"}, {"H_h"}, {"delta"}, {"delta_h", true}};
constexpr FieldSpec kCreditSpecs[] = {{"S_a"}, {"E_a"}, {"I_a"}, {"s_a"},
                                      {"E_h"}, {"I_h"}, {"i_h"}, {"h_h"},
                                      {"H_h"}, {"beta"}};

template <class P, std::size_t N>
double* lookup(P& p, const Field<P> (&table)[N], std::string_view name) {
  for (const auto& f : table) {
    if (f.name == name) return &(p.*f.member);
  }
  return nullptr;
}

// Violation collector; each check records the constraint text and the two
// values compared.
class Checks {
 public:
  void gt(std::string constraint, double lhs, double rhs) {
    if (!(lhs > rhs)) out_.push_back({std::move(constraint), lhs, rhs});
  }
  void ge(std::string constraint, double lhs, double rhs) {
    if (!(lhs >= rhs)) out_.push_back({std::move(constraint), lhs, rhs});
  }
  void finite(std::string_view name, double v) {
    if (!std::isfinite(v)) {
      out_.push_back({std::string(name) + " is finite", v,
                      std::numeric_limits<double>::infinity()});
    }
  }
  void unit_interval(std::string_view name, double v) {
    gt(std::string(name) + " > 0", v, 0.0);
    gt("1 > " + std::string(name), 1.0, v);
  }
  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::vector<Violation> out_;
};

template <class P, std::size_t N>
void check_finite(Checks& c, const P& p, const Field<P> (&table)[N]) {
  for (const auto& f : table) c.finite(f.name, p.*f.member);
}

[[noreturn]] void throw_invalid(const std::vector<Violation>& violations) {
  std::string msg = "invalid parameters:";
  for (const auto& v : violations) msg += " [" + v.describe() + "]";
  throw Error(ErrorCode::InvalidParams, msg);
}

template <class P>
void require_valid(const P& p) {
  auto violations = validate(p);
  if (!violations.empty()) throw_invalid(violations);
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string str(std::string_view s) { return std::string(s); }

}  // namespace

std::string_view to_string(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::Sanctions: return "sanctions";
    case ScenarioKind::Competition: return "competition";
    case ScenarioKind::Monopoly: return "monopoly";
    case ScenarioKind::Credit: return "credit";
  }
  return "unknown";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) {
  for (auto kind : {ScenarioKind::Sanctions, ScenarioKind::Competition,
                    ScenarioKind::Monopoly, ScenarioKind::Credit}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

bool is_repeated(ScenarioKind kind) noexcept {
  return kind == ScenarioKind::Competition || kind == ScenarioKind::Monopoly;
}

ScenarioKind kind_of(const ScenarioParams& params) noexcept {
  return static_cast<ScenarioKind>(params.index());
}

std::span<const FieldSpec> fields(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::Sanctions: return kSanctionsSpecs;
    case ScenarioKind::Competition: return kCompetitionSpecs;
    case ScenarioKind::Monopoly: return kMonopolySpecs;
    case ScenarioKind::Credit: return kCreditSpecs;
  }
  return {};
}

std::optional<double> get_field(const ScenarioParams& params,
                                std::string_view name) {
  ScenarioParams copy = params;
  if (auto* m = std::get_if<MonopolyParams>(&copy);
      m != nullptr && name == kMonopolyHumanDiscount) {
    return m->delta_h_report;
  }
  double* slot = std::visit(
      [&](auto& p) -> double* {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, SanctionsParams>) {
          return lookup(p, kSanctionsFields, name);
        } else if constexpr (std::is_same_v<P, CompetitionParams>) {
          return lookup(p, kCompetitionFields, name);
        } else if constexpr (std::is_same_v<P, MonopolyParams>) {
          return lookup(p, kMonopolyFields, name);
        } else {
          return lookup(p, kCreditFields, name);
        }
      },
      copy);
  if (slot == nullptr) return std::nullopt;
  return *slot;
}

bool set_field(ScenarioParams& params, std::string_view name, double value) {
  if (auto* m = std::get_if<MonopolyParams>(&params);
      m != nullptr && name == kMonopolyHumanDiscount) {
    m->delta_h_report = value;
    return true;
  }
  double* slot = std::visit(
      [&](auto& p) -> double* {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, SanctionsParams>) {
          return lookup(p, kSanctionsFields, name);
        } else if constexpr (std::is_same_v<P, CompetitionParams>) {
          return lookup(p, kCompetitionFields, name);
        } else if constexpr (std::is_same_v<P, MonopolyParams>) {
          return lookup(p, kMonopolyFields, name);
        } else {
          return lookup(p, kCreditFields, name);
        }
      },
      params);
  if (slot == nullptr) return false;
  *slot = value;
  return true;
}

ScenarioParams make_params(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Sanctions: return SanctionsParams{};
    case ScenarioKind::Competition: return CompetitionParams{};
    case ScenarioKind::Monopoly: return MonopolyParams{};
    case ScenarioKind::Credit: return CreditParams{};
  }
  return SanctionsParams{};
}

std::string Violation::describe() const {
  return constraint + " (" + format_value(lhs) + " vs " + format_value(rhs) +
         ")";
}

std::vector<Violation> validate(const SanctionsParams& p) {
  Checks c;
  check_finite(c, p, kSanctionsFields);
  c.gt("S_a > E_a", p.S_a, p.E_a);
  c.gt("E_a > -P_a", p.E_a, -p.P_a);
  c.gt("E_h > -C_h", p.E_h, -p.C_h);
  c.gt("E_h > -H_h", p.E_h, -p.H_h);
  return c.take();
}

std::vector<Violation> validate(const CompetitionParams& p) {
  Checks c;
  check_finite(c, p, kCompetitionFields);
  c.gt("S_a > T_a", p.S_a, p.T_a);
  c.gt("T_a > s_a", p.T_a, p.s_a);
  c.gt("s_a > E_a", p.s_a, p.E_a);
  c.gt("E_h > -h_h", p.E_h, -p.h_h);
  c.gt("-h_h > -f_h", -p.h_h, -p.f_h);
  c.gt("-f_h > -h_h - C_h", -p.f_h, -p.h_h - p.C_h);
  c.gt("-h_h - C_h > -H_h", -p.h_h - p.C_h, -p.H_h);
  // Grim-trigger flight must be credible; positivity keeps the credibility
  // check well defined.
  c.gt("f_h > 0", p.f_h, 0.0);
  c.ge("H_h >= f_h", p.H_h, p.f_h);
  c.unit_interval("delta_a", p.delta_a);
  c.unit_interval("delta_h", p.delta_h);
  return c.take();
}

std::vector<Violation> validate(const MonopolyParams& p) {
  Checks c;
  check_finite(c, p, kMonopolyFields);
  c.gt("S_a > T_a", p.S_a, p.T_a);
  c.gt("T_a > s_a", p.T_a, p.s_a);
  c.gt("s_a > E_a", p.s_a, p.E_a);
  c.gt("E_h > -h_h", p.E_h, -p.h_h);
  c.gt("-h_h > -H_h", -p.h_h, -p.H_h);
  c.unit_interval("delta", p.delta);
  if (p.delta_h_report) c.unit_interval("delta_h", *p.delta_h_report);
  return c.take();
}

std::vector<Violation> validate(const CreditParams& p) {
  Checks c;
  check_finite(c, p, kCreditFields);
  c.gt("S_a > E_a", p.S_a, p.E_a);
  c.gt("E_a > I_a", p.E_a, p.I_a);
  c.gt("I_a > s_a", p.I_a, p.s_a);
  c.gt("E_h > I_h", p.E_h, p.I_h);
  c.gt("I_h > i_h", p.I_h, p.i_h);
  c.gt("i_h > -h_h", p.i_h, -p.h_h);
  c.gt("-h_h > -H_h", -p.h_h, -p.H_h);
  // The ratio threshold I_a/E_a needs E_a > 0, and promise keeping needs a
  // strictly positive loss from reneging.
  c.gt("E_a > 0", p.E_a, 0.0);
  c.gt("h_h > 0", p.h_h, 0.0);
  c.unit_interval("beta", p.beta);
  return c.take();
}

std::vector<Violation> validate(const ScenarioParams& p) {
  return std::visit([](const auto& q) { return validate(q); }, p);
}

std::string_view to_string(OutcomeLabel label) noexcept {
  switch (label) {
    case OutcomeLabel::Trade: return "Trade";
    case OutcomeLabel::StealUnsanctioned: return "StealUnsanctioned";
    case OutcomeLabel::Skim: return "Skim";
    case OutcomeLabel::StealThenFlight: return "StealThenFlight";
    case OutcomeLabel::Tax: return "Tax";
    case OutcomeLabel::StealThenSubsist: return "StealThenSubsist";
    case OutcomeLabel::CreditTrade: return "CreditTrade";
    case OutcomeLabel::Ignore: return "Ignore";
  }
  return "Unknown";
}

std::span<const OutcomeLabel> reachable_labels(ScenarioKind kind) noexcept {
  static constexpr OutcomeLabel kSanctions[] = {
      OutcomeLabel::Trade, OutcomeLabel::StealUnsanctioned};
  static constexpr OutcomeLabel kCompetition[] = {
      OutcomeLabel::Skim, OutcomeLabel::StealThenFlight};
  static constexpr OutcomeLabel kMonopoly[] = {OutcomeLabel::Tax,
                                               OutcomeLabel::StealThenSubsist};
  static constexpr OutcomeLabel kCredit[] = {OutcomeLabel::CreditTrade,
                                             OutcomeLabel::Ignore};
  switch (kind) {
    case ScenarioKind::Sanctions: return kSanctions;
    case ScenarioKind::Competition: return kCompetition;
    case ScenarioKind::Monopoly: return kMonopoly;
    case ScenarioKind::Credit: return kCredit;
  }
  return {};
}

std::string_view to_string(ValueKind kind) noexcept {
  return kind == ValueKind::OneShot ? "OneShot" : "PDV";
}

GameNode build_game_tree(const SanctionsParams& p) {
  require_valid(p);
  using B = GameNode::Branch;
  std::vector<B> human_reply;
  human_reply.emplace_back(str(action::kSanction),
                           GameNode::terminal({-p.P_a, -p.C_h}));
  human_reply.emplace_back(str(action::kNothing),
                           GameNode::terminal({p.S_a, -p.H_h}));

  std::vector<B> root;
  root.emplace_back(str(action::kTrade), GameNode::terminal({p.E_a, p.E_h}));
  root.emplace_back(str(action::kSteal),
                    GameNode::decision(kHumans, std::move(human_reply)));
  return GameNode::decision(kAsi, std::move(root));
}

GameNode build_game_tree(const CreditParams& p) {
  require_valid(p);
  using B = GameNode::Branch;
  const double beta = p.beta;

  std::vector<B> after_trade_output;
  after_trade_output.emplace_back(str(action::kTrade),
                                  GameNode::terminal({p.E_a, p.E_h}));
  after_trade_output.emplace_back(str(action::kSteal),
                                  GameNode::terminal({p.S_a, -p.H_h}));
  after_trade_output.emplace_back(str(action::kIgnore),
                                  GameNode::terminal({p.I_a, p.I_h}));

  // Advance payment in subperiod 1; delivery or default in subperiod 2.
  std::vector<B> promise;
  promise.emplace_back(str(action::kKeep),
                       GameNode::terminal({beta * p.E_a, p.E_h}));
  promise.emplace_back(str(action::kBreak),
                       GameNode::terminal({beta * p.s_a, p.E_h - beta * p.h_h}));

  std::vector<B> after_subsistence;
  after_subsistence.emplace_back(
      str(action::kTrade), GameNode::decision(kHumans, std::move(promise)));
  after_subsistence.emplace_back(str(action::kSteal),
                                 GameNode::terminal({p.s_a, -p.h_h}));
  after_subsistence.emplace_back(str(action::kIgnore),
                                 GameNode::terminal({p.I_a, p.i_h}));

  std::vector<B> root;
  root.emplace_back(str(action::kProduceForTrade),
                    GameNode::decision(kAsi, std::move(after_trade_output)));
  root.emplace_back(str(action::kProduceForSubsistence),
                    GameNode::decision(kAsi, std::move(after_subsistence)));
  return GameNode::decision(kHumans, std::move(root));
}

Outcome classify_sanctions(const SanctionsParams& p) {
  require_valid(p);
  Outcome out;
  out.value_kind = ValueKind::OneShot;
  // Sanctioning is credible when its cost does not exceed the harm of
  // inaction; the ASI then trades.
  if (decide(p.C_h <= p.H_h)) {
    out.label = OutcomeLabel::Trade;
    out.path = {{"once", kAsi, str(action::kTrade)}};
    out.asi_value = p.E_a;
    out.human_value = p.E_h;
  } else {
    out.label = OutcomeLabel::StealUnsanctioned;
    out.path = {{"once", kAsi, str(action::kSteal)},
                {"once", kHumans, str(action::kNothing)}};
    out.asi_value = p.S_a;
    out.human_value = -p.H_h;
  }
  return out;
}

Outcome classify_competition(const CompetitionParams& p) {
  require_valid(p);
  const DiscountFactor da(p.delta_a);
  const DiscountFactor dh(p.delta_h);
  Outcome out;
  out.value_kind = ValueKind::PDV;
  if (decide(repeated::prefers_restraint(p.S_a, p.T_a, p.s_a, da))) {
    out.label = OutcomeLabel::Skim;
    out.path = {{"t>=0", kAsi, str(action::kSkim)},
                {"t>=0", kHumans, str(action::kNothing)}};
    out.asi_value = repeated::pdv(PayoffStream::constant(p.T_a), da);
    out.human_value = repeated::pdv(PayoffStream::constant(-p.h_h), dh);
  } else {
    out.label = OutcomeLabel::StealThenFlight;
    out.path = {{"t=0", kAsi, str(action::kSteal)},
                {"t=0", kHumans, str(action::kFlee)},
                {"t>=1", kAsi, str(action::kSteal)},
                {"t>=1", kHumans, str(action::kFled)}};
    out.asi_value =
        repeated::pdv(PayoffStream::switching(p.S_a, p.s_a), da);
    out.human_value =
        repeated::pdv(PayoffStream::switching(-p.H_h, -p.f_h), dh);
  }
  return out;
}

Outcome classify_monopoly(const MonopolyParams& p) {
  require_valid(p);
  const DiscountFactor d(p.delta);
  const DiscountFactor dh(p.human_discount());
  Outcome out;
  out.value_kind = ValueKind::PDV;
  // Trade is dominated period by period (T_a > E_a) and never chosen.
  if (decide(repeated::prefers_restraint(p.S_a, p.T_a, p.s_a, d))) {
    out.label = OutcomeLabel::Tax;
    out.path = {{"t>=0", kAsi, str(action::kTax)},
                {"t>=0", kHumans, str(action::kInaction)}};
    out.asi_value = repeated::pdv(PayoffStream::constant(p.T_a), d);
    out.human_value = repeated::pdv(PayoffStream::constant(-p.h_h), dh);
  } else {
    out.label = OutcomeLabel::StealThenSubsist;
    out.path = {{"t=0", kAsi, str(action::kSteal)},
                {"t=0", kHumans, str(action::kInaction)},
                {"t>=1", kAsi, str(action::kSteal)},
                {"t>=1", kHumans, str(action::kInaction)}};
    out.asi_value = repeated::pdv(PayoffStream::switching(p.S_a, p.s_a), d);
    out.human_value = repeated::pdv(PayoffStream::constant(-p.H_h), dh);
  }
  return out;
}

Outcome classify_credit(const CreditParams& p) {
  require_valid(p);
  Outcome out;
  out.value_kind = ValueKind::OneShot;
  // Producing for trade invites theft (-H_h, the humans' worst payoff), so
  // humans produce for subsistence. The ASI then pays in advance iff the
  // discounted purchase beta*E_a is worth at least ignoring them, I_a; this
  // is the product form of beta >= I_a/E_a and matches the tree's terminals.
  if (decide(p.beta * p.E_a >= p.I_a)) {
    out.label = OutcomeLabel::CreditTrade;
    out.path = {{"once", kHumans, str(action::kProduceForSubsistence)},
                {"once", kAsi, str(action::kTrade)},
                {"once", kHumans, str(action::kKeep)}};
    out.asi_value = p.beta * p.E_a;
    out.human_value = p.E_h;
  } else {
    out.label = OutcomeLabel::Ignore;
    out.path = {{"once", kHumans, str(action::kProduceForSubsistence)},
                {"once", kAsi, str(action::kIgnore)}};
    out.asi_value = p.I_a;
    out.human_value = p.i_h;
  }
  return out;
}

Outcome classify(const ScenarioParams& p) {
  return std::visit(
      [](const auto& q) -> Outcome {
        using P = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<P, SanctionsParams>) {
          return classify_sanctions(q);
        } else if constexpr (std::is_same_v<P, CompetitionParams>) {
          return classify_competition(q);
        } else if constexpr (std::is_same_v<P, MonopolyParams>) {
          return classify_monopoly(q);
        } else {
          return classify_credit(q);
        }
      },
      p);
}

Threshold threshold(const ScenarioParams& p) {
  auto violations = validate(p);
  if (!violations.empty()) throw_invalid(violations);
  const Outcome outcome = classify(p);
  Threshold t;
  std::visit(
      [&](const auto& q) {
        using P = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<P, SanctionsParams>) {
          t = {"C_h", q.C_h, q.H_h, "<=", false};
        } else if constexpr (std::is_same_v<P, CompetitionParams>) {
          t = {"delta_a", q.delta_a,
               repeated::critical_discount(q.S_a, q.T_a, q.s_a), ">=", false};
        } else if constexpr (std::is_same_v<P, MonopolyParams>) {
          t = {"delta", q.delta,
               repeated::critical_discount(q.S_a, q.T_a, q.s_a), ">=", false};
        } else {
          t = {"beta", q.beta, q.I_a / q.E_a, ">=", false};
        }
      },
      p);
  t.cooperative = outcome.label == OutcomeLabel::Trade ||
                  outcome.label == OutcomeLabel::Skim ||
                  outcome.label == OutcomeLabel::Tax ||
                  outcome.label == OutcomeLabel::CreditTrade;
  return t;
}

std::string_view asi_discount_field(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::Competition: return "delta_a";
    case ScenarioKind::Monopoly: return "delta";
    default: return {};
  }
}

std::vector<LineCell> classify_discount_line(
    const ScenarioParams& base, std::span<const double> deltas,
    const kernels::KernelSet& kernels) {
  const ScenarioKind kind = kind_of(base);
  if (!is_repeated(kind)) {
    throw Error(ErrorCode::InvalidParams,
                "discount-line classification needs a repeated scenario");
  }
  const std::size_t n = deltas.size();
  std::vector<LineCell> cells(n, LineCell{std::nullopt, kNaN, kNaN});

  // Everything but the swept discount is shared by the line; check it once
  // with an in-range stand-in.
  ScenarioParams probe = base;
  set_field(probe, asi_discount_field(kind), 0.5);
  if (!validate(probe).empty()) return cells;

  const auto& core = std::visit(
      [](const auto& q) -> std::array<double, 3> {
        using P = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<P, CompetitionParams> ||
                      std::is_same_v<P, MonopolyParams>) {
          return {q.S_a, q.T_a, q.s_a};
        } else {
          return {kNaN, kNaN, kNaN};
        }
      },
      base);
  const double S_a = core[0], T_a = core[1], s_a = core[2];

  std::vector<std::uint8_t> restrain(n);
  std::vector<double> restraint_value(n), steal_value(n);
  kernels.restraint_mask(S_a, T_a, s_a, deltas, restrain);
  kernels.constant_pdv(T_a, deltas, restraint_value);
  kernels.switching_pdv(S_a, s_a, deltas, steal_value);

  std::vector<double> human_coop(n), human_pred(n);
  OutcomeLabel coop_label{}, pred_label{};
  if (const auto* c = std::get_if<CompetitionParams>(&base)) {
    coop_label = OutcomeLabel::Skim;
    pred_label = OutcomeLabel::StealThenFlight;
    const DiscountFactor dh(c->delta_h);
    human_coop.assign(n, repeated::pdv(PayoffStream::constant(-c->h_h), dh));
    human_pred.assign(
        n, repeated::pdv(PayoffStream::switching(-c->H_h, -c->f_h), dh));
  } else {
    const auto& m = std::get<MonopolyParams>(base);
    coop_label = OutcomeLabel::Tax;
    pred_label = OutcomeLabel::StealThenSubsist;
    if (m.delta_h_report) {
      const DiscountFactor dh(*m.delta_h_report);
      human_coop.assign(n, repeated::pdv(PayoffStream::constant(-m.h_h), dh));
      human_pred.assign(n, repeated::pdv(PayoffStream::constant(-m.H_h), dh));
    } else {
      kernels.constant_pdv(-m.h_h, deltas, human_coop);
      kernels.constant_pdv(-m.H_h, deltas, human_pred);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!(deltas[i] > 0.0 && deltas[i] < 1.0)) continue;
    if (decide(restrain[i] != 0)) {
      cells[i] = {coop_label, restraint_value[i], human_coop[i]};
    } else {
      cells[i] = {pred_label, steal_value[i], human_pred[i]};
    }
  }
  return cells;
}

}  // namespace predation::scenarios
