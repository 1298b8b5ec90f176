#pragma once

// Finite extensive-form games of perfect information and their
// backward-induction solution.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace predation::game {

struct PlayerId {
  std::size_t index = 0;
  auto operator<=>(const PlayerId&) const = default;
};

inline constexpr PlayerId kAsi{0};
inline constexpr PlayerId kHumans{1};

// Node ids are assigned in depth-first preorder; the root is 0.
using NodeId = std::size_t;

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

// Immutable tree node. A node is either a decision (player plus an ordered,
// non-empty list of labelled actions) or a terminal carrying one payoff per
// player. Declaration order of actions is significant: it drives node ids and
// tie-breaking.
class GameNode {
 public:
  using Branch = std::pair<std::string, GameNode>;

  static GameNode terminal(std::vector<double> payoffs);
  static GameNode decision(PlayerId player, std::vector<Branch> actions);

  bool is_terminal() const noexcept { return terminal_; }
  PlayerId player() const noexcept { return player_; }
  std::span<const double> payoffs() const noexcept { return payoffs_; }
  std::size_t action_count() const noexcept { return children_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const GameNode& child(std::size_t i) const { return children_.at(i); }

 private:
  GameNode() = default;

  bool terminal_ = true;
  PlayerId player_{};
  std::vector<std::string> labels_;
  std::vector<GameNode> children_;
  std::vector<double> payoffs_;
};

// Flattened view of one node in a validated game.
struct FlatNode {
  bool terminal = true;
  PlayerId player{};
  std::optional<NodeId> parent;
  std::vector<std::string> labels;
  std::vector<NodeId> children;
  std::vector<double> payoffs;

  // Index of `label` among this node's actions, if present.
  std::optional<std::size_t> action_index(const std::string& label) const;
};

// A game whose tree invariants have been checked, stored in preorder.
// Children always carry larger ids than their parent.
class ValidatedGame {
 public:
  std::size_t n_players() const noexcept { return n_players_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t decision_count() const noexcept { return decision_ids_.size(); }
  std::size_t terminal_count() const noexcept {
    return nodes_.size() - decision_ids_.size();
  }
  const FlatNode& node(NodeId id) const { return nodes_.at(id); }
  std::span<const FlatNode> nodes() const noexcept { return nodes_; }
  // Decision node ids in increasing (preorder) order.
  std::span<const NodeId> decision_ids() const noexcept {
    return decision_ids_;
  }

 private:
  friend ValidatedGame validate_tree(const GameNode&, std::size_t,
                                     std::size_t);
  std::size_t n_players_ = 0;
  std::vector<FlatNode> nodes_;
  std::vector<NodeId> decision_ids_;
};

// Chosen action label per decision node id.
class StrategyMap {
 public:
  void set(NodeId id, std::string label) { choices_[id] = std::move(label); }
  const std::string* find(NodeId id) const;
  std::size_t size() const noexcept { return choices_.size(); }
  const std::map<NodeId, std::string>& entries() const noexcept {
    return choices_;
  }
  bool operator==(const StrategyMap&) const = default;

 private:
  std::map<NodeId, std::string> choices_;
};

struct PathStep {
  NodeId node = 0;
  std::string action;
  bool operator==(const PathStep&) const = default;
};

struct PlayResult {
  std::vector<PathStep> path;
  std::vector<double> payoffs;
  bool operator==(const PlayResult&) const = default;
};

struct SolveResult {
  StrategyMap strategy;
  std::vector<PathStep> path;
  std::vector<double> payoffs;
  bool operator==(const SolveResult&) const = default;
};

// Throws Error{CyclicOrOversized, PayoffArity, EmptyDecision, DuplicateAction}.
ValidatedGame validate_tree(const GameNode& root, std::size_t n_players,
                            std::size_t node_cap = kDefaultNodeCap);

// Each decision node takes the action maximizing its player's continuation
// payoff; exact ties go to the earliest-declared action.
SolveResult backward_induction(const ValidatedGame& game);

// Throws Error{IncompleteStrategy} unless `strategy` names a valid action at
// every decision node.
PlayResult play_path(const ValidatedGame& game, const StrategyMap& strategy);

}  // namespace predation::game
