#pragma once

// Brute-force cross-checks that share no code path with the solvers:
// pure-strategy profile enumeration with definition-level Nash and
// subgame-perfection tests, and direct summation of payoff streams.

#include <cstddef>
#include <string>
#include <vector>

#include "predation/game_tree.hpp"
#include "predation/repeated.hpp"
#include "predation/scenarios.hpp"

namespace predation::oracle {

inline constexpr std::size_t kProfileCap = 1'000'000;

struct ProfileRow {
  game::StrategyMap strategy;
  std::vector<double> payoffs;
  bool is_nash = false;
  bool is_spe = false;
  // SPE whose every choice is the earliest-declared maximizer, i.e. the
  // profile the first-declared tie rule selects.
  bool is_canonical = false;
};

struct ProfileTable {
  // Rows in lexicographic order of action indices, decision nodes taken in
  // preorder with the root most significant.
  std::vector<ProfileRow> rows;
};

// Throws Error{TooLarge} when the profile count exceeds `cap`.
ProfileTable enumerate_profiles(const game::ValidatedGame& game,
                                std::size_t cap = kProfileCap);

enum class TieRule {
  Any,            // any payoff-maximal action passes
  FirstDeclared,  // the chosen action must be the first maximal one
};

// At every decision node, the acting player's chosen action must be
// payoff-maximal against the strategy's own continuation.
// Throws Error{IncompleteStrategy}.
bool verify_spe(const game::ValidatedGame& game,
                const game::StrategyMap& strategy,
                TieRule rule = TieRule::Any);

struct TruncatedSum {
  double value = 0;
  double tail_bound = 0;
};

// Direct sum over t = 0..horizon, with a bound on the omitted tail.
TruncatedSum truncated_pdv(const repeated::PayoffStream& stream,
                           repeated::DiscountFactor d, std::size_t horizon);

struct FieldCheck {
  std::string field;
  std::string classifier;
  std::string oracle;
  bool agree = false;
};

struct CheckReport {
  scenarios::ScenarioKind scenario{};
  std::string method;
  std::vector<FieldCheck> fields;
  bool agree() const;
};

// Relative tolerance for PDV comparisons between the two routes.
inline constexpr double kValueRelTol = 1e-12;

// Runs the scenario's classifier and the matching independent oracle.
// Throws Error{InvalidParams}.
CheckReport cross_check(const scenarios::ScenarioParams& params);

}  // namespace predation::oracle
