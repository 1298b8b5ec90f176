#include "predation/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "predation/error.hpp"

namespace predation::oracle {

using game::FlatNode;
using game::NodeId;
using game::ValidatedGame;
using repeated::DiscountFactor;
using repeated::PayoffStream;
using scenarios::OutcomeLabel;

namespace {

constexpr std::size_t kNoChoice = std::numeric_limits<std::size_t>::max();

// Action index per node id (kNoChoice at terminals).
using Profile = std::vector<std::size_t>;

const std::vector<double>& play_from(std::span<const FlatNode> nodes,
                                     const Profile& profile, NodeId start) {
  NodeId at = start;
  while (!nodes[at].terminal) at = nodes[at].children[profile[at]];
  return nodes[at].payoffs;
}

// Preorder subtree sizes: the subgame rooted at v is [v, v + size[v]).
std::vector<std::size_t> subtree_sizes(std::span<const FlatNode> nodes) {
  std::vector<std::size_t> size(nodes.size(), 1);
  for (NodeId id = nodes.size(); id-- > 1;) {
    size[*nodes[id].parent] += size[id];
  }
  return size;
}

// No player can gain by switching to any other pure strategy of their own
// inside the subgame rooted at `root`.
bool nash_in_subgame(std::span<const FlatNode> nodes,
                     std::span<const NodeId> decisions, const Profile& profile,
                     NodeId root, std::size_t subgame_size,
                     std::size_t n_players) {
  const auto& base = play_from(nodes, profile, root);
  for (std::size_t p = 0; p < n_players; ++p) {
    std::vector<NodeId> own;
    for (NodeId id : decisions) {
      if (id >= root && id < root + subgame_size &&
          nodes[id].player.index == p) {
        own.push_back(id);
      }
    }
    if (own.empty()) continue;

    Profile trial = profile;
    for (NodeId id : own) trial[id] = 0;
    while (true) {
      if (play_from(nodes, trial, root)[p] > base[p]) return false;
      std::size_t k = own.size();
      while (k-- > 0) {
        if (++trial[own[k]] < nodes[own[k]].children.size()) break;
        trial[own[k]] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
  return true;
}

// Local optimality of every choice against the profile's own continuation.
bool locally_optimal(std::span<const FlatNode> nodes,
                     std::span<const NodeId> decisions, const Profile& profile,
                     TieRule rule) {
  for (NodeId id : decisions) {
    const FlatNode& node = nodes[id];
    const std::size_t p = node.player.index;
    const double chosen =
        play_from(nodes, profile, node.children[profile[id]])[p];
    for (std::size_t a = 0; a < node.children.size(); ++a) {
      const double alt = play_from(nodes, profile, node.children[a])[p];
      if (alt > chosen) return false;
      if (rule == TieRule::FirstDeclared && a < profile[id] && alt >= chosen) {
        return false;
      }
    }
  }
  return true;
}

Profile to_profile(const ValidatedGame& game,
                   const game::StrategyMap& strategy) {
  Profile profile(game.node_count(), kNoChoice);
  for (NodeId id : game.decision_ids()) {
    const std::string* label = strategy.find(id);
    if (label == nullptr) {
      throw Error(ErrorCode::IncompleteStrategy,
                  "strategy has no action for decision node " +
                      std::to_string(id));
    }
    auto index = game.node(id).action_index(*label);
    if (!index) {
      throw Error(ErrorCode::IncompleteStrategy,
                  "strategy chooses unknown action '" + *label + "' at node " +
                      std::to_string(id));
    }
    profile[id] = *index;
  }
  if (strategy.size() != game.decision_count()) {
    throw Error(ErrorCode::IncompleteStrategy,
                "strategy names nodes that are not decision nodes");
  }
  return profile;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool close(double a, double b) {
  if (a == b) return true;
  return std::fabs(a - b) <= kValueRelTol * std::max(std::fabs(a), std::fabs(b));
}

std::string path_text(const std::vector<std::string>& actions) {
  std::string out;
  for (const auto& a : actions) {
    if (!out.empty()) out += ",";
    out += a;
  }
  return out.empty() ? "-" : out;
}

std::vector<std::string> path_actions(const scenarios::Outcome& outcome) {
  std::vector<std::string> out;
  for (const auto& step : outcome.path) out.push_back(step.action);
  return out;
}

struct OracleVerdict {
  std::string label;
  std::vector<std::string> path;
  double asi_value = 0;
  double human_value = 0;
  std::string extra_name;
  std::string extra_expected;
  std::string extra_observed;
};

CheckReport compare(scenarios::ScenarioKind kind, std::string method,
                    const scenarios::Outcome& outcome,
                    const OracleVerdict& oracle, bool exact_values) {
  CheckReport report;
  report.scenario = kind;
  report.method = std::move(method);
  const std::string label(scenarios::to_string(outcome.label));
  report.fields.push_back({"label", label, oracle.label, label == oracle.label});
  const auto classifier_path = path_actions(outcome);
  report.fields.push_back({"path", path_text(classifier_path),
                           path_text(oracle.path),
                           classifier_path == oracle.path});
  auto value_ok = [&](double a, double b) {
    return exact_values ? a == b : close(a, b);
  };
  report.fields.push_back({"asi_value", num(outcome.asi_value),
                           num(oracle.asi_value),
                           value_ok(outcome.asi_value, oracle.asi_value)});
  report.fields.push_back({"human_value", num(outcome.human_value),
                           num(oracle.human_value),
                           value_ok(outcome.human_value, oracle.human_value)});
  if (!oracle.extra_name.empty()) {
    report.fields.push_back({oracle.extra_name, oracle.extra_expected,
                             oracle.extra_observed,
                             oracle.extra_expected == oracle.extra_observed});
  }
  return report;
}

// Selects the canonical SPE row of a one-shot scenario tree and names the
// outcome its play reaches.
template <class Params>
OracleVerdict enumerate_one_shot(const Params& params) {
  const auto game = game::validate_tree(scenarios::build_game_tree(params), 2);
  const auto table = enumerate_profiles(game);

  OracleVerdict verdict;
  verdict.extra_name = "canonical_spe_rows";
  verdict.extra_expected = "1";
  std::size_t canonical = 0;
  const ProfileRow* chosen = nullptr;
  for (const auto& row : table.rows) {
    if (row.is_canonical) {
      ++canonical;
      if (chosen == nullptr) chosen = &row;
    }
  }
  verdict.extra_observed = std::to_string(canonical);
  if (chosen == nullptr) {
    verdict.label = "none";
    return verdict;
  }

  NodeId at = 0;
  while (!game.node(at).terminal) {
    const std::string& label = *chosen->strategy.find(at);
    verdict.path.push_back(label);
    at = game.node(at).children[*game.node(at).action_index(label)];
  }
  verdict.asi_value = chosen->payoffs[0];
  verdict.human_value = chosen->payoffs[1];

  namespace act = scenarios::action;
  using V = std::vector<std::string>;
  const auto& path = verdict.path;
  if constexpr (std::is_same_v<Params, scenarios::SanctionsParams>) {
    if (path == V{std::string(act::kTrade)}) {
      verdict.label = "Trade";
    } else if (path == V{std::string(act::kSteal), std::string(act::kNothing)}) {
      verdict.label = "StealUnsanctioned";
    }
  } else {
    if (path == V{std::string(act::kProduceForSubsistence),
                  std::string(act::kTrade), std::string(act::kKeep)}) {
      verdict.label = "CreditTrade";
    } else if (path == V{std::string(act::kProduceForSubsistence),
                         std::string(act::kIgnore)}) {
      verdict.label = "Ignore";
    }
  }
  if (verdict.label.empty()) verdict.label = "other(" + path_text(path) + ")";
  return verdict;
}

struct MenuItem {
  std::string action;
  PayoffStream stream;
};

// First item with maximal PDV; menus list the cooperative choice first.
std::size_t best_of(const std::vector<MenuItem>& menu, DiscountFactor d) {
  std::size_t best = 0;
  double best_value = repeated::pdv(menu[0].stream, d);
  for (std::size_t i = 1; i < menu.size(); ++i) {
    const double v = repeated::pdv(menu[i].stream, d);
    if (v > best_value) {
      best = i;
      best_value = v;
    }
  }
  return best;
}

OracleVerdict menu_competition(const scenarios::CompetitionParams& p) {
  namespace act = scenarios::action;
  const DiscountFactor da(p.delta_a);
  const DiscountFactor dh(p.delta_h);

  // Human replies to each ASI action, compared over whole streams.
  const std::vector<MenuItem> reply_to_steal{
      {std::string(act::kFlee), PayoffStream::switching(-p.H_h, -p.f_h)},
      {std::string(act::kNothing), PayoffStream::constant(-p.H_h)},
      {std::string(act::kSanction), PayoffStream::constant(-p.H_h - p.C_h)},
  };
  const std::vector<MenuItem> reply_to_skim{
      {std::string(act::kNothing), PayoffStream::constant(-p.h_h)},
      {std::string(act::kFlee), PayoffStream::switching(-p.h_h, -p.f_h)},
      {std::string(act::kSanction), PayoffStream::constant(-p.h_h - p.C_h)},
  };
  const std::size_t steal_reply = best_of(reply_to_steal, dh);
  const std::size_t skim_reply = best_of(reply_to_skim, dh);
  const bool flee_after_steal = reply_to_steal[steal_reply].action == act::kFlee;
  const bool flee_after_skim = reply_to_skim[skim_reply].action == act::kFlee;

  const std::vector<MenuItem> asi_menu{
      {std::string(act::kSkim), flee_after_skim
                                    ? PayoffStream::switching(p.T_a, p.s_a)
                                    : PayoffStream::constant(p.T_a)},
      {std::string(act::kSteal), flee_after_steal
                                     ? PayoffStream::switching(p.S_a, p.s_a)
                                     : PayoffStream::constant(p.S_a)},
      {std::string(act::kTrade), PayoffStream::constant(p.E_a)},
  };
  const std::size_t pick = best_of(asi_menu, da);

  OracleVerdict verdict;
  verdict.asi_value = repeated::pdv(asi_menu[pick].stream, da);
  verdict.extra_name = "humans_flee_after_steal";
  verdict.extra_expected = "yes";
  verdict.extra_observed = flee_after_steal ? "yes" : "no";
  const std::string& a = asi_menu[pick].action;
  if (a == act::kSkim) {
    const auto& reply = reply_to_skim[skim_reply];
    verdict.path = {a, reply.action};
    verdict.human_value = repeated::pdv(reply.stream, dh);
    verdict.label = reply.action == act::kNothing ? "Skim" : "other";
  } else if (a == act::kSteal) {
    const auto& reply = reply_to_steal[steal_reply];
    verdict.path = {a, reply.action, a, std::string(act::kFled)};
    verdict.human_value = repeated::pdv(reply.stream, dh);
    verdict.label = flee_after_steal ? "StealThenFlight" : "other";
  } else {
    verdict.path = {a, std::string(act::kNothing)};
    verdict.human_value = repeated::pdv(PayoffStream::constant(p.E_h), dh);
    verdict.label = "Trade";
  }
  return verdict;
}

OracleVerdict menu_monopoly(const scenarios::MonopolyParams& p) {
  namespace act = scenarios::action;
  const DiscountFactor d(p.delta);
  const DiscountFactor dh(p.human_discount());
  const std::vector<MenuItem> asi_menu{
      {std::string(act::kTax), PayoffStream::constant(p.T_a)},
      {std::string(act::kSteal), PayoffStream::switching(p.S_a, p.s_a)},
      {std::string(act::kTrade), PayoffStream::constant(p.E_a)},
  };
  const std::vector<PayoffStream> human_stream{
      PayoffStream::constant(-p.h_h),
      PayoffStream::constant(-p.H_h),
      PayoffStream::constant(p.E_h),
  };
  const std::size_t pick = best_of(asi_menu, d);

  OracleVerdict verdict;
  verdict.asi_value = repeated::pdv(asi_menu[pick].stream, d);
  verdict.human_value = repeated::pdv(human_stream[pick], dh);
  const std::string& a = asi_menu[pick].action;
  const std::string idle(act::kInaction);
  if (a == act::kTax) {
    verdict.label = "Tax";
    verdict.path = {a, idle};
  } else if (a == act::kSteal) {
    verdict.label = "StealThenSubsist";
    verdict.path = {a, idle, a, idle};
  } else {
    verdict.label = "Trade";
    verdict.path = {a, idle};
  }
  return verdict;
}

}  // namespace

ProfileTable enumerate_profiles(const ValidatedGame& game, std::size_t cap) {
  const auto nodes = game.nodes();
  const auto decisions = game.decision_ids();

  std::size_t count = 1;
  for (NodeId id : decisions) {
    const std::size_t k = nodes[id].children.size();
    if (count > cap / k) {
      throw Error(ErrorCode::TooLarge, "more than " + std::to_string(cap) +
                                           " pure strategy profiles");
    }
    count *= k;
  }

  const auto sizes = subtree_sizes(nodes);
  ProfileTable table;
  table.rows.reserve(count);

  Profile profile(nodes.size(), kNoChoice);
  for (NodeId id : decisions) profile[id] = 0;

  for (std::size_t row_index = 0; row_index < count; ++row_index) {
    ProfileRow row;
    for (NodeId id : decisions) {
      row.strategy.set(id, nodes[id].labels[profile[id]]);
    }
    row.payoffs = play_from(nodes, profile, 0);
    row.is_nash = nash_in_subgame(nodes, decisions, profile, 0, nodes.size(),
                                  game.n_players());
    row.is_spe = row.is_nash;
    for (NodeId v : decisions) {
      if (!row.is_spe) break;
      if (v == 0) continue;
      row.is_spe = nash_in_subgame(nodes, decisions, profile, v, sizes[v],
                                   game.n_players());
    }
    row.is_canonical =
        row.is_spe &&
        locally_optimal(nodes, decisions, profile, TieRule::FirstDeclared);
    table.rows.push_back(std::move(row));

    // Mixed-radix increment, last decision node fastest.
    for (std::size_t k = decisions.size(); k-- > 0;) {
      const NodeId id = decisions[k];
      if (++profile[id] < nodes[id].children.size()) break;
      profile[id] = 0;
    }
  }
  return table;
}

bool verify_spe(const ValidatedGame& game, const game::StrategyMap& strategy,
                TieRule rule) {
  const Profile profile = to_profile(game, strategy);
  return locally_optimal(game.nodes(), game.decision_ids(), profile, rule);
}

TruncatedSum truncated_pdv(const PayoffStream& stream, DiscountFactor d,
                           std::size_t horizon) {
  const double delta = d.value();
  TruncatedSum out;
  double weight = 1.0;
  for (std::size_t t = 0; t <= horizon; ++t) {
    out.value += weight * stream.at(t);
    weight *= delta;
  }
  double tail_max = 0.0;
  for (std::size_t t = horizon + 1; t < stream.prefix().size(); ++t) {
    tail_max = std::max(tail_max, std::fabs(stream.prefix()[t]));
  }
  for (double x : stream.cycle()) tail_max = std::max(tail_max, std::fabs(x));
  out.tail_bound = tail_max * weight / (1.0 - delta);
  return out;
}

bool CheckReport::agree() const {
  return std::all_of(fields.begin(), fields.end(),
                     [](const FieldCheck& f) { return f.agree; });
}

CheckReport cross_check(const scenarios::ScenarioParams& params) {
  using scenarios::ScenarioKind;
  const auto outcome = scenarios::classify(params);
  const ScenarioKind kind = scenarios::kind_of(params);
  switch (kind) {
    case ScenarioKind::Sanctions:
      return compare(kind, "profile enumeration", outcome,
                     enumerate_one_shot(
                         std::get<scenarios::SanctionsParams>(params)),
                     true);
    case ScenarioKind::Credit:
      return compare(
          kind, "profile enumeration", outcome,
          enumerate_one_shot(std::get<scenarios::CreditParams>(params)), true);
    case ScenarioKind::Competition:
      return compare(
          kind, "PDV menu comparison", outcome,
          menu_competition(std::get<scenarios::CompetitionParams>(params)),
          false);
    case ScenarioKind::Monopoly:
      return compare(
          kind, "PDV menu comparison", outcome,
          menu_monopoly(std::get<scenarios::MonopolyParams>(params)), false);
  }
  return {};
}

}  // namespace predation::oracle
