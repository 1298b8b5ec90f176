#pragma once

// Reference parameter sets and random generators of ordering-valid draws,
// shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "predation/game_tree.hpp"
#include "predation/scenarios.hpp"

namespace predation::testing {

inline scenarios::SanctionsParams reference_sanctions() {
  return {10, 5, 3, 5, 2, 4};
}

inline scenarios::CompetitionParams reference_competition(double delta_a = 0.6) {
  return {10, 6, 2, 1, 5, 1, 2, 2, 4, delta_a, 0.5};
}

inline scenarios::MonopolyParams reference_monopoly(double delta = 0.6) {
  return {10, 6, 2, 1, 5, 1, 4, delta, std::nullopt};
}

inline scenarios::CreditParams reference_credit(double beta = 0.7) {
  return {10, 5, 3, 1, 6, 4, 2, 1, 5, beta};
}

inline std::string source_path(const std::string& relative) {
  return std::string(PREDATION_SOURCE_DIR) + "/" + relative;
}

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }
  double gap() { return uniform(0.05, 5.0); }
  double discount() { return uniform(0.01, 0.99); }

  // Integer-valued magnitudes make C_h == H_h ties common.
  scenarios::SanctionsParams sanctions(bool integer_costs = false) {
    scenarios::SanctionsParams p;
    p.E_a = uniform(-5, 5);
    p.S_a = p.E_a + gap();
    p.P_a = -p.E_a + gap();
    p.E_h = uniform(0, 10);
    if (integer_costs) {
      p.C_h = integer(0, 4);
      p.H_h = integer(1, 4);
    } else {
      p.C_h = uniform(0, 8);
      p.H_h = uniform(0.01, 8);
    }
    return p;
  }

  scenarios::CompetitionParams competition() {
    scenarios::CompetitionParams p;
    p.E_a = uniform(-5, 5);
    p.s_a = p.E_a + gap();
    p.T_a = p.s_a + gap();
    p.S_a = p.T_a + gap();
    p.h_h = uniform(0.05, 3);
    p.E_h = uniform(0, 5);
    p.f_h = p.h_h + gap();
    p.C_h = (p.f_h - p.h_h) + gap();
    p.H_h = p.h_h + p.C_h + gap();
    p.delta_a = discount();
    p.delta_h = discount();
    return p;
  }

  scenarios::MonopolyParams monopoly() {
    scenarios::MonopolyParams p;
    p.E_a = uniform(-5, 5);
    p.s_a = p.E_a + gap();
    p.T_a = p.s_a + gap();
    p.S_a = p.T_a + gap();
    p.h_h = uniform(0.05, 3);
    p.E_h = uniform(0, 5);
    p.H_h = p.h_h + gap();
    p.delta = discount();
    if (coin()) p.delta_h_report = discount();
    return p;
  }

  scenarios::CreditParams credit() {
    scenarios::CreditParams p;
    p.s_a = uniform(-2, 2);
    p.I_a = p.s_a + gap();
    p.E_a = std::max(p.I_a, 0.0) + gap();
    p.S_a = p.E_a + gap();
    p.h_h = uniform(0.05, 3);
    p.H_h = p.h_h + gap();
    p.i_h = -p.h_h + gap();
    p.I_h = p.i_h + gap();
    p.E_h = p.I_h + gap();
    p.beta = discount();
    return p;
  }

  // Random perfect-information tree with at most `max_decisions` decision
  // nodes. Integer payoffs in [-3, 3] make ties frequent; `real_payoffs`
  // makes them vanishingly rare.
  game::GameNode tree(std::size_t n_players, std::size_t max_decisions,
                      bool real_payoffs) {
    std::size_t budget = max_decisions;
    return subtree(n_players, budget, real_payoffs, 0);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  game::GameNode subtree(std::size_t n_players, std::size_t& budget,
                         bool real_payoffs, int depth) {
    const bool stop = budget == 0 || (depth > 0 && integer(0, 3) == 0);
    if (stop) {
      std::vector<double> payoffs(n_players);
      for (auto& x : payoffs) {
        x = real_payoffs ? uniform(-10, 10) : integer(-3, 3);
      }
      return game::GameNode::terminal(std::move(payoffs));
    }
    --budget;
    const game::PlayerId player{
        static_cast<std::size_t>(integer(0, static_cast<int>(n_players) - 1))};
    const int actions = integer(1, 3);
    std::vector<game::GameNode::Branch> branches;
    for (int a = 0; a < actions; ++a) {
      branches.emplace_back("a" + std::to_string(a),
                            subtree(n_players, budget, real_payoffs, depth + 1));
    }
    return game::GameNode::decision(player, std::move(branches));
  }

  std::mt19937_64 rng_;
};

}  // namespace predation::testing
