#include "predation/commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "predation/error.hpp"
#include "predation/oracle.hpp"
#include "predation/repeated.hpp"
#include "predation/scenario_file.hpp"
#include "predation/scenarios.hpp"
#include "predation/sweep.hpp"

namespace predation::cli {

using repeated::DiscountFactor;
using repeated::PayoffStream;
using scenarios::OutcomeLabel;
using scenarios::ScenarioKind;

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string_view player_name(game::PlayerId p) {
  return p == game::kAsi ? "ASI" : "Humans";
}

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
  return kExitInputError;
}

// Parses and validates; on failure prints the reason and returns nullopt.
std::optional<ScenarioFile> load(const std::string& path, std::ostream& err) {
  ScenarioFile file = parse_scenario_file(read_text_file(path));
  const auto violations = scenarios::validate(file.params);
  if (!violations.empty()) {
    err << "invalid parameters for scenario "
        << scenarios::to_string(file.kind()) << ":\n";
    for (const auto& v : violations) {
      err << "  violation: " << v.describe() << "\n";
    }
    return std::nullopt;
  }
  return file;
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

// Equilibrium-path streams of a repeated scenario, with their discounts.
struct PathStreams {
  PayoffStream asi;
  PayoffStream humans;
  DiscountFactor asi_discount;
  DiscountFactor human_discount;
};

PathStreams path_streams(const scenarios::ScenarioParams& params,
                         const scenarios::Outcome& outcome) {
  if (const auto* c = std::get_if<scenarios::CompetitionParams>(&params)) {
    const DiscountFactor da(c->delta_a), dh(c->delta_h);
    if (outcome.label == OutcomeLabel::Skim) {
      return {PayoffStream::constant(c->T_a), PayoffStream::constant(-c->h_h),
              da, dh};
    }
    return {PayoffStream::switching(c->S_a, c->s_a),
            PayoffStream::switching(-c->H_h, -c->f_h), da, dh};
  }
  const auto& m = std::get<scenarios::MonopolyParams>(params);
  const DiscountFactor d(m.delta), dh(m.human_discount());
  if (outcome.label == OutcomeLabel::Tax) {
    return {PayoffStream::constant(m.T_a), PayoffStream::constant(-m.h_h), d,
            dh};
  }
  return {PayoffStream::switching(m.S_a, m.s_a),
          PayoffStream::constant(-m.H_h), d, dh};
}

std::string action_at(const scenarios::Outcome& outcome, game::PlayerId who,
                      std::size_t t) {
  for (const auto& step : outcome.path) {
    if (step.player != who) continue;
    if (step.periods == "t>=0" || (step.periods == "t=0" && t == 0) ||
        (step.periods == "t>=1" && t >= 1)) {
      return step.action;
    }
  }
  return "-";
}

}  // namespace

int cmd_solve(const std::string& path, const SolveOptions& options,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto file = load(path, err);
    if (!file) return kExitInputError;
    const auto outcome = scenarios::classify(file->params);
    const auto th = scenarios::threshold(file->params);
    const bool met = th.relation == ">=" ? th.value >= th.critical
                                         : th.value <= th.critical;

    if (options.json) {
      nlohmann::ordered_json rec;
      rec["scenario"] = std::string(scenarios::to_string(file->kind()));
      rec["outcome"] = std::string(scenarios::to_string(outcome.label));
      rec["value_kind"] = std::string(scenarios::to_string(outcome.value_kind));
      rec["asi_value"] = outcome.asi_value;
      rec["human_value"] = outcome.human_value;
      auto steps = nlohmann::ordered_json::array();
      for (const auto& s : outcome.path) {
        steps.push_back({{"periods", s.periods},
                         {"player", std::string(player_name(s.player))},
                         {"action", s.action}});
      }
      rec["path"] = std::move(steps);
      rec["threshold"] = {{"parameter", th.parameter},
                          {"relation", th.relation},
                          {"critical", th.critical},
                          {"value", th.value},
                          {"met", met}};
      out << rec.dump() << "\n";
      return kExitOk;
    }

    out << pad("scenario", 13) << scenarios::to_string(file->kind()) << "\n";
    out << pad("outcome", 13) << scenarios::to_string(outcome.label) << "\n";
    out << pad("value_kind", 13) << scenarios::to_string(outcome.value_kind)
        << "\n";
    bool first = true;
    for (const auto& s : outcome.path) {
      out << pad(first ? "path" : "", 13) << pad(s.periods, 6)
          << pad(player_name(s.player), 8) << s.action << "\n";
      first = false;
    }
    out << pad("asi_value", 13) << fixed6(outcome.asi_value) << "\n";
    out << pad("human_value", 13) << fixed6(outcome.human_value) << "\n";
    out << pad("threshold", 13) << th.parameter << " " << th.relation << " "
        << fixed6(th.critical) << " selects the cooperative outcome\n";
    out << pad("input", 13) << th.parameter << " = " << fixed6(th.value)
        << (met ? " (met)" : " (not met)") << "\n";
    return kExitOk;
  });
}

int cmd_sweep(const std::string& path, const std::string& csv_path,
              const std::optional<std::string>& svg_path, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    auto file = load(path, err);
    if (!file) return kExitInputError;
    if (!file->sweep) {
      throw Error(ErrorCode::NoSweepBlock,
                  "scenario file '" + path + "' has no sweep block");
    }
    const auto map = sweep::run_sweep(file->params, *file->sweep);
    write_file(csv_path, sweep::emit_csv(map));
    out << "wrote " << csv_path << " (" << map.cells.size() << " rows)\n";
    if (svg_path) {
      write_file(*svg_path, sweep::emit_svg(map));
      out << "wrote " << *svg_path << "\n";
    }
    for (std::size_t a = 0; a < map.axes.size(); ++a) {
      const std::string& name = map.axes[a].param_name;
      try {
        const auto estimates = sweep::boundary_estimate(map, a);
        for (double b : estimates) {
          out << "boundary along " << name << ": " << fixed6(b) << "\n";
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoBoundary) throw;
        out << "no boundary along " << name << "\n";
      }
    }
    return kExitOk;
  });
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto file = load(path, err);
    if (!file) return kExitInputError;
    const auto report = oracle::cross_check(file->params);
    out << pad("scenario", 10) << scenarios::to_string(report.scenario) << "\n";
    out << pad("oracle", 10) << report.method << "\n";
    std::size_t wf = 5, wc = 10, wo = 6;
    for (const auto& f : report.fields) {
      wf = std::max(wf, f.field.size());
      wc = std::max(wc, f.classifier.size());
      wo = std::max(wo, f.oracle.size());
    }
    out << pad("field", wf + 2) << pad("classifier", wc + 2)
        << pad("oracle", wo + 2) << "status\n";
    for (const auto& f : report.fields) {
      out << pad(f.field, wf + 2) << pad(f.classifier, wc + 2)
          << pad(f.oracle, wo + 2) << (f.agree ? "ok" : "MISMATCH") << "\n";
    }
    const bool agree = report.agree();
    out << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? kExitOk : kExitDisagree;
  });
}

int cmd_trace(const std::string& path, std::size_t periods, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    auto file = load(path, err);
    if (!file) return kExitInputError;
    if (!scenarios::is_repeated(file->kind())) {
      throw Error(ErrorCode::NotRepeatedScenario,
                  "trace needs a competition or monopoly scenario, got " +
                      std::string(scenarios::to_string(file->kind())));
    }
    const auto outcome = scenarios::classify(file->params);
    const auto streams = path_streams(file->params, outcome);

    out << "outcome " << scenarios::to_string(outcome.label) << "\n";
    out << pad("t", 6) << pad("asi_action", 12) << pad("human_action", 14)
        << pad("asi_payoff", 14) << pad("human_payoff", 14)
        << pad("asi_total", 14) << "human_total\n";

    // Same summation order as oracle::truncated_pdv.
    double asi_total = 0.0, human_total = 0.0;
    double asi_weight = 1.0, human_weight = 1.0;
    for (std::size_t t = 0; t < periods; ++t) {
      const double xa = streams.asi.at(t);
      const double xh = streams.humans.at(t);
      asi_total += asi_weight * xa;
      human_total += human_weight * xh;
      asi_weight *= streams.asi_discount.value();
      human_weight *= streams.human_discount.value();
      out << pad(std::to_string(t), 6)
          << pad(action_at(outcome, game::kAsi, t), 12)
          << pad(action_at(outcome, game::kHumans, t), 14)
          << pad(fixed6(xa), 14) << pad(fixed6(xh), 14)
          << pad(fixed6(asi_total), 14) << fixed6(human_total) << "\n";
    }
    return kExitOk;
  });
}

}  // namespace predation::cli
