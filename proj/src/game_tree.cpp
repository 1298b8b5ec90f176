#include "predation/game_tree.hpp"

#include <string>
#include <unordered_set>

#include "predation/error.hpp"

namespace predation::game {

GameNode GameNode::terminal(std::vector<double> payoffs) {
  GameNode node;
  node.terminal_ = true;
  node.payoffs_ = std::move(payoffs);
  return node;
}

GameNode GameNode::decision(PlayerId player, std::vector<Branch> actions) {
  GameNode node;
  node.terminal_ = false;
  node.player_ = player;
  node.labels_.reserve(actions.size());
  node.children_.reserve(actions.size());
  for (auto& [label, child] : actions) {
    node.labels_.push_back(std::move(label));
    node.children_.push_back(std::move(child));
  }
  return node;
}

std::optional<std::size_t> FlatNode::action_index(
    const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  return std::nullopt;
}

const std::string* StrategyMap::find(NodeId id) const {
  auto it = choices_.find(id);
  return it == choices_.end() ? nullptr : &it->second;
}

ValidatedGame validate_tree(const GameNode& root, std::size_t n_players,
                            std::size_t node_cap) {
  ValidatedGame game;
  game.n_players_ = n_players;

  // Explicit stack so deep chains cannot overflow the call stack. Children
  // are pushed in reverse so they pop in declaration order (preorder).
  struct Pending {
    const GameNode* node;
    std::optional<NodeId> parent;
  };
  std::vector<Pending> stack{{&root, std::nullopt}};

  while (!stack.empty()) {
    Pending item = stack.back();
    stack.pop_back();

    if (game.nodes_.size() >= node_cap) {
      throw Error(ErrorCode::CyclicOrOversized,
                  "game tree exceeds node cap of " + std::to_string(node_cap));
    }
    const NodeId id = game.nodes_.size();
    if (item.parent) game.nodes_[*item.parent].children.push_back(id);

    FlatNode flat;
    flat.parent = item.parent;
    const GameNode& node = *item.node;

    if (node.is_terminal()) {
      if (node.payoffs().size() != n_players) {
        throw Error(ErrorCode::PayoffArity,
                    "terminal node " + std::to_string(id) + " has " +
                        std::to_string(node.payoffs().size()) +
                        " payoffs, expected " + std::to_string(n_players));
      }
      flat.terminal = true;
      flat.payoffs.assign(node.payoffs().begin(), node.payoffs().end());
      game.nodes_.push_back(std::move(flat));
      continue;
    }

    if (node.action_count() == 0) {
      throw Error(ErrorCode::EmptyDecision,
                  "decision node " + std::to_string(id) + " has no actions");
    }
    if (node.player().index >= n_players) {
      throw Error(ErrorCode::PayoffArity,
                  "decision node " + std::to_string(id) + " names player " +
                      std::to_string(node.player().index) + " of " +
                      std::to_string(n_players));
    }
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < node.action_count(); ++i) {
      if (!seen.insert(node.label(i)).second) {
        throw Error(ErrorCode::DuplicateAction,
                    "decision node " + std::to_string(id) +
                        " declares action '" + node.label(i) + "' twice");
      }
      flat.labels.push_back(node.label(i));
    }
    flat.terminal = false;
    flat.player = node.player();
    game.decision_ids_.push_back(id);
    game.nodes_.push_back(std::move(flat));

    for (std::size_t i = node.action_count(); i-- > 0;) {
      stack.push_back({&node.child(i), id});
    }
  }
  return game;
}

SolveResult backward_induction(const ValidatedGame& game) {
  const auto nodes = game.nodes();
  std::vector<const std::vector<double>*> value(nodes.size(), nullptr);
  std::vector<std::size_t> choice(nodes.size(), 0);

  // Reverse preorder visits every child before its parent.
  for (NodeId id = nodes.size(); id-- > 0;) {
    const FlatNode& node = nodes[id];
    if (node.terminal) {
      value[id] = &node.payoffs;
      continue;
    }
    const std::size_t p = node.player.index;
    std::size_t best = 0;
    for (std::size_t a = 1; a < node.children.size(); ++a) {
      if ((*value[node.children[a]])[p] > (*value[node.children[best]])[p]) {
        best = a;
      }
    }
    choice[id] = best;
    value[id] = value[node.children[best]];
  }

  SolveResult result;
  for (NodeId id : game.decision_ids()) {
    result.strategy.set(id, nodes[id].labels[choice[id]]);
  }
  NodeId at = 0;
  while (!nodes[at].terminal) {
    result.path.push_back({at, nodes[at].labels[choice[at]]});
    at = nodes[at].children[choice[at]];
  }
  result.payoffs = nodes[at].payoffs;
  return result;
}

PlayResult play_path(const ValidatedGame& game, const StrategyMap& strategy) {
  const auto nodes = game.nodes();
  for (NodeId id : game.decision_ids()) {
    const std::string* label = strategy.find(id);
    if (label == nullptr) {
      throw Error(ErrorCode::IncompleteStrategy,
                  "strategy has no action for decision node " +
                      std::to_string(id));
    }
    if (!nodes[id].action_index(*label)) {
      throw Error(ErrorCode::IncompleteStrategy,
                  "strategy chooses unknown action '" + *label +
                      "' at node " + std::to_string(id));
    }
  }
  if (strategy.size() != game.decision_count()) {
    throw Error(ErrorCode::IncompleteStrategy,
                "strategy names nodes that are not decision nodes");
  }

  PlayResult result;
  NodeId at = 0;
  while (!nodes[at].terminal) {
    const std::string& label = *strategy.find(at);
    result.path.push_back({at, label});
    at = nodes[at].children[*nodes[at].action_index(label)];
  }
  result.payoffs = nodes[at].payoffs;
  return result;
}

}  // namespace predation::game
