// Acceptance checks AC1-AC7. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "predation/commands.hpp"
#include "predation/oracle.hpp"
#include "predation/repeated.hpp"
#include "predation/scenario_file.hpp"
#include "predation/scenarios.hpp"
#include "predation/sweep.hpp"
#include "support/generators.hpp"

using namespace predation;
using repeated::DiscountFactor;
using repeated::PayoffStream;
using scenarios::OutcomeLabel;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Reasons a criterion failed; empty means pass.
using Failures = std::vector<std::string>;

void expect(Failures& f, bool ok, const std::string& what) {
  if (!ok && f.size() < 5) f.push_back(what);
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// AC1: sanctions dichotomy, checked against profile enumeration.
Failures ac1() {
  Failures f;
  testing::Draws draws(0xac0001);
  for (int i = 0; i < 2000; ++i) {
    const auto p = draws.sanctions(i % 2 == 0);
    const auto o = scenarios::classify_sanctions(p);
    const bool trade = p.C_h <= p.H_h;
    expect(f, (o.label == OutcomeLabel::Trade) == trade,
           fmt("draw %g: label disagrees with C_h <= H_h", i));
    expect(f, oracle::cross_check(p).agree(),
           fmt("draw %g: enumeration disagrees", i));
  }
  return f;
}

// AC2: discount threshold for taxing/skimming versus stealing.
Failures ac2() {
  Failures f;
  expect(f, repeated::critical_discount(10, 6, 2) == 0.5,
         "critical_discount(10, 6, 2) != 0.5");

  const auto map = sweep::run_sweep(testing::reference_monopoly(),
                                    {{"delta", 0.05, 0.95, 181}});
  const auto b = sweep::boundary_estimate(map, 0);
  // 0.4975 - 0.5 is 0.0025 plus one ulp in binary; allow rounding slack.
  expect(f, b.size() == 1 && std::fabs(b[0] - 0.5) <= 0.0025 + 1e-12,
         fmt("boundary %.17g not within 0.0025 of 0.5", b.empty() ? NAN : b[0]));

  testing::Draws draws(0xac0002);
  for (int i = 0; i < 2000; ++i) {
    const double s = draws.uniform(-10, 10);
    const double T = s + draws.gap();
    const double S = T + draws.gap();
    const double d = draws.discount();
    const double crit = repeated::critical_discount(S, T, s);
    auto m = testing::reference_monopoly(d);
    m.S_a = S, m.T_a = T, m.s_a = s, m.E_a = s - draws.gap();
    auto c = testing::reference_competition(d);
    c.S_a = S, c.T_a = T, c.s_a = s, c.E_a = m.E_a;
    const bool restrain = d >= crit;
    expect(f, (scenarios::classify_monopoly(m).label == OutcomeLabel::Tax) == restrain,
           fmt("monopoly label disagrees with delta >= %.17g at delta %.17g", crit, d));
    expect(f, (scenarios::classify_competition(c).label == OutcomeLabel::Skim) == restrain,
           fmt("competition label disagrees with delta >= %.17g at delta %.17g", crit, d));
  }
  return f;
}

// AC3: credit threshold and promise keeping.
Failures ac3() {
  Failures f;
  const sweep::AxisSpec axis{"beta", 0.1, 0.9, 81};
  const double spacing = (axis.hi - axis.lo) / 80;
  const auto map = sweep::run_sweep(testing::reference_credit(), {axis});
  const auto b = sweep::boundary_estimate(map, 0);
  expect(f, b.size() == 1 && std::fabs(b[0] - 0.6) <= spacing,
         fmt("beta boundary %.17g not within %g of 0.6", b.empty() ? NAN : b[0], spacing));

  testing::Draws draws(0xac0003);
  for (int i = 0; i < 2000; ++i) {
    auto p = draws.credit();
    if (i % 10 == 0) p.beta = p.I_a / p.E_a;
    if (!scenarios::validate(p).empty()) continue;
    const auto game = game::validate_tree(scenarios::build_game_tree(p), 2);
    const auto r = game::backward_induction(game);
    const auto o = scenarios::classify_credit(p);
    expect(f, r.payoffs[0] == o.asi_value && r.payoffs[1] == o.human_value,
           fmt("draw %g: tree payoffs differ from classifier", i));
    const bool credit_trade = r.path.size() == 3 && r.path[1].action == "trade";
    expect(f, credit_trade == (o.label == OutcomeLabel::CreditTrade),
           fmt("draw %g: tree label differs from classifier", i));
    // Keep must be chosen at the promise node whether or not it is reached.
    for (game::NodeId id : game.decision_ids()) {
      const auto& node = game.node(id);
      if (node.action_index("keep")) {
        expect(f, *r.strategy.find(id) == "keep",
               fmt("draw %g: humans break the promise", i));
      }
    }
  }
  return f;
}

// AC4: closed-form PDV against truncated and long direct sums.
Failures ac4() {
  Failures f;
  testing::Draws draws(0xac0004);
  double worst_rel = 0;
  for (int i = 0; i < 10000; ++i) {
    std::vector<double> prefix(static_cast<std::size_t>(draws.integer(0, 5)));
    std::vector<double> cycle(static_cast<std::size_t>(draws.integer(1, 4)));
    for (auto& x : prefix) x = draws.uniform(-100, 100);
    for (auto& x : cycle) x = draws.uniform(-100, 100);
    const PayoffStream s(prefix, cycle);
    const double dv = i % 500 == 0 ? 0.95 : draws.uniform(1e-9, 0.95);
    const DiscountFactor d(dv);

    const double closed = repeated::pdv(s, d);
    const auto trunc = oracle::truncated_pdv(s, d, 200);

    double long_sum = 0, abs_sum = 0, w = 1, max_abs = 0;
    for (double x : prefix) max_abs = std::max(max_abs, std::fabs(x));
    for (double x : cycle) max_abs = std::max(max_abs, std::fabs(x));
    std::size_t k = 0;
    for (std::size_t t = 0; t < 10000; ++t) {
      // Weights only shrink, so once a term is under half an ulp of both
      // running sums no later addition can change either of them.
      const double term_max = w * max_abs;
      if (term_max < std::fabs(long_sum) * kEps / 4 && term_max < abs_sum * kEps / 4) break;
      double x;
      if (t < prefix.size()) {
        x = prefix[t];
      } else {
        x = cycle[k];
        k = k + 1 == cycle.size() ? 0 : k + 1;
      }
      long_sum += w * x;
      abs_sum += w * std::fabs(x);
      w *= dv;
    }
    // Rounding slack proportional to the magnitude that was summed.
    const double slack = 64 * kEps * abs_sum;
    expect(f, std::fabs(closed - trunc.value) <= trunc.tail_bound + slack,
           fmt("|pdv - truncated| = %.3g exceeds bound %.3g", std::fabs(closed - trunc.value),
               trunc.tail_bound + slack));
    // Relative to the summed magnitude, so cancellation to near zero does
    // not inflate the ratio.
    const double rel = std::fabs(closed - long_sum) / std::max(std::fabs(long_sum), abs_sum);
    worst_rel = std::max(worst_rel, rel);
    expect(f, rel <= 1e-10, fmt("relative error %.3g vs 10000-term sum", rel));
  }
  std::printf("      worst relative error vs 10000-term sum: %.3g\n", worst_rel);
  return f;
}

// AC5: flight credibility is independent of the human discount.
Failures ac5() {
  Failures f;
  testing::Draws draws(0xac0005);
  for (int i = 0; i < 2000; ++i) {
    const double H = draws.uniform(0.01, 20);
    const double fl = draws.uniform(0.01, 20);
    const bool credible = repeated::flight_credible(H, fl);
    for (double dh : {0.1, 0.5, 0.9}) {
      const DiscountFactor d(dh);
      // Flee: lose H_h now, f_h forever after. Stay: lose H_h forever.
      const double flee = repeated::pdv(PayoffStream::switching(-H, -fl), d);
      const double stay = repeated::pdv(PayoffStream::constant(-H), d);
      expect(f, (flee >= stay) == credible,
             fmt("H_h=%g f_h=%g disagrees at delta_h=%g", H, fl, dh));
    }
  }

  // Exact ties are equal only in real arithmetic; the two PDV routes round
  // differently, so report how the floating-point comparison lands.
  int agree = 0, total = 0;
  for (int x = 1; x <= 20; ++x) {
    for (double dh : {0.1, 0.5, 0.9}) {
      const DiscountFactor d(dh);
      const double flee = repeated::pdv(PayoffStream::switching(-x, -x), d);
      const double stay = repeated::pdv(PayoffStream::constant(-x), d);
      agree += flee >= stay;
      ++total;
    }
  }
  std::printf("      ties H_h == f_h: raw comparison credible in %d of %d cases\n",
              agree, total);
  return f;
}

// AC6: neither repeated game ever produces Trade.
Failures ac6() {
  Failures f;
  const std::vector<sweep::AxisSpec> monopoly{{"delta", 0.01, 0.99, 100},
                                              {"T_a", 1.01, 9.99, 100}};
  const std::vector<sweep::AxisSpec> competition{{"delta_a", 0.01, 0.99, 100},
                                                 {"T_a", 1.01, 9.99, 100}};
  std::size_t feasible = 0;
  for (const auto& map :
       {sweep::run_sweep(testing::reference_monopoly(), monopoly),
        sweep::run_sweep(testing::reference_competition(), competition)}) {
    expect(f, map.cells.size() == 10000, "grid is not 100x100");
    for (const auto& c : map.cells) {
      if (!c.label) continue;
      ++feasible;
      expect(f, *c.label != OutcomeLabel::Trade,
             fmt("Trade at (%g, %g)", c.coords[0], c.coords[1]));
    }
  }
  expect(f, feasible > 10000, "grid is mostly infeasible");
  return f;
}

// AC7: golden fixtures and the monopoly trace.
Failures ac7() {
  Failures f;
  for (const char* name : {"monopoly_delta_sweep", "credit_beta_sweep"}) {
    const auto file = cli::parse_scenario_file(
        cli::read_text_file(testing::source_path(std::string("scenarios/") + name + ".json")));
    const auto map = sweep::run_sweep(file.params, *file.sweep);
    const std::string golden = testing::source_path(std::string("tests/golden/") + name);
    expect(f, sweep::emit_csv(map) == slurp(golden + ".csv"),
           std::string(name) + ".csv differs from fixture");
    expect(f, sweep::emit_svg(map) == slurp(golden + ".svg"),
           std::string(name) + ".svg differs from fixture");
  }

  std::ostringstream out, err;
  const int code =
      cli::cmd_trace(testing::source_path("scenarios/monopoly.json"), 5, out, err);
  expect(f, code == cli::kExitOk, "trace failed");
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  for (const char* want : {"6.000000", "9.600000", "11.760000", "13.056000", "13.833600"}) {
    std::getline(lines, line);
    std::istringstream cols(line);
    std::string col;
    for (int k = 0; k < 6; ++k) cols >> col;
    expect(f, col == want, "trace total " + col + " != " + want);
  }
  return f;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;  // 0 = no runtime limit
  std::function<Failures()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "sanctions dichotomy vs enumeration", 5, ac1},
      {"AC2", "discount threshold 0.5 and sign test", 5, ac2},
      {"AC3", "credit threshold and promise keeping", 5, ac3},
      {"AC4", "closed-form PDV vs truncated sums", 10, ac4},
      {"AC5", "flight credibility independent of delta_h", 0, ac5},
      {"AC6", "no Trade on 100x100 repeated-game grids", 0, ac6},
      {"AC7", "golden CSV/SVG fixtures and monopoly trace", 0, ac7},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Failures f;
    try {
      f = c.run();
    } catch (const std::exception& e) {
      f.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      f.push_back(fmt("runtime %.2f s exceeds %g s", secs, c.limit_s));
    }
    std::printf("[%s] %s %s (%.3f s)\n", f.empty() ? "PASS" : "FAIL", c.id, c.title,
                secs);
    for (const auto& why : f) std::printf("      %s\n", why.c_str());
    if (!f.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
