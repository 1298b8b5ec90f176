#include "predation/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "predation/error.hpp"

namespace predation::sweep {

using scenarios::OutcomeLabel;
using scenarios::ScenarioKind;
using scenarios::ScenarioParams;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs body(i) for i in [0, n). Each index writes only its own slots, so
// results land in a fixed order whatever the scheduling.
template <class Body>
void parallel_for(std::size_t n, std::size_t threads, Body&& body) {
  if (threads == 0) {
    threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

bool has_field(ScenarioKind kind, std::string_view name) {
  for (const auto& f : scenarios::fields(kind)) {
    if (f.name == name) return true;
  }
  return false;
}

Cell classify_point(const ScenarioParams& params, std::vector<double> coords) {
  Cell cell{std::move(coords), std::nullopt, kNaN, kNaN};
  if (!scenarios::validate(params).empty()) return cell;
  const auto outcome = scenarios::classify(params);
  cell.label = outcome.label;
  cell.asi_value = outcome.asi_value;
  cell.human_value = outcome.human_value;
  return cell;
}

std::string fixed6(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string_view label_text(std::optional<OutcomeLabel> label) {
  return label ? scenarios::to_string(*label) : std::string_view("Infeasible");
}

}  // namespace

double AxisSpec::coordinate(std::size_t i) const {
  const double last = static_cast<double>(steps - 1);
  const double k = static_cast<double>(i);
  return (lo * (last - k) + hi * k) / last;
}

RegionMap run_sweep(const ScenarioParams& base,
                    const std::vector<AxisSpec>& axes,
                    const SweepOptions& options) {
  if (axes.empty() || axes.size() > 2) {
    throw Error(ErrorCode::EmptyGrid, "a sweep needs one or two axes");
  }
  const ScenarioKind kind = scenarios::kind_of(base);
  for (const auto& axis : axes) {
    if (!has_field(kind, axis.param_name)) {
      throw Error(ErrorCode::UnknownParam,
                  "unknown parameter '" + axis.param_name + "' for scenario " +
                      std::string(scenarios::to_string(kind)));
    }
    if (axis.steps < 2 || !(axis.lo < axis.hi)) {
      throw Error(ErrorCode::EmptyGrid,
                  "axis '" + axis.param_name +
                      "' needs steps >= 2 and lo < hi");
    }
  }
  if (auto violations = scenarios::validate(base); !violations.empty()) {
    std::string msg = "invalid base parameters:";
    for (const auto& v : violations) msg += " [" + v.describe() + "]";
    throw Error(ErrorCode::InvalidParams, msg);
  }

  RegionMap map;
  map.scenario = kind;
  map.axes = axes;
  const std::size_t n0 = axes[0].steps;
  const std::size_t n1 = axes.size() == 2 ? axes[1].steps : 1;
  map.cells.resize(n0 * n1);

  const kernels::KernelSet& kern =
      options.kernels != nullptr ? *options.kernels : kernels::active_kernels();

  // Scanline path: exactly one axis sweeps the ASI discount factor.
  std::optional<std::size_t> line_axis;
  if (options.batch_discount_lines && scenarios::is_repeated(kind)) {
    const auto field = scenarios::asi_discount_field(kind);
    for (std::size_t a = 0; a < axes.size(); ++a) {
      if (axes[a].param_name == field) {
        line_axis = line_axis ? std::nullopt : std::optional<std::size_t>(a);
        if (!line_axis) break;
      }
    }
  }

  if (line_axis) {
    const std::size_t la = *line_axis;
    const AxisSpec& line = axes[la];
    std::vector<double> deltas(line.steps);
    for (std::size_t i = 0; i < line.steps; ++i) deltas[i] = line.coordinate(i);
    const std::size_t lines = axes.size() == 2 ? axes[1 - la].steps : 1;

    parallel_for(lines, options.threads, [&](std::size_t j) {
      ScenarioParams params = base;
      if (axes.size() == 2) {
        scenarios::set_field(params, axes[1 - la].param_name,
                             axes[1 - la].coordinate(j));
      }
      const auto row = scenarios::classify_discount_line(params, deltas, kern);
      for (std::size_t i = 0; i < line.steps; ++i) {
        const std::size_t i0 = la == 0 ? i : j;
        const std::size_t i1 = la == 0 ? j : i;
        Cell& cell = map.cells[i0 * n1 + i1];
        cell.coords = {axes[0].coordinate(i0)};
        if (axes.size() == 2) cell.coords.push_back(axes[1].coordinate(i1));
        cell.label = row[i].label;
        cell.asi_value = row[i].asi_value;
        cell.human_value = row[i].human_value;
      }
    });
    return map;
  }

  parallel_for(map.cells.size(), options.threads, [&](std::size_t idx) {
    const std::size_t i0 = idx / n1;
    const std::size_t i1 = idx % n1;
    ScenarioParams params = base;
    std::vector<double> coords{axes[0].coordinate(i0)};
    scenarios::set_field(params, axes[0].param_name, coords[0]);
    if (axes.size() == 2) {
      coords.push_back(axes[1].coordinate(i1));
      scenarios::set_field(params, axes[1].param_name, coords[1]);
    }
    map.cells[idx] = classify_point(params, std::move(coords));
  });
  return map;
}

std::vector<double> boundary_estimate(const RegionMap& map, std::size_t axis) {
  if (axis >= map.axes.size()) {
    throw Error(ErrorCode::UnknownParam,
                "axis index " + std::to_string(axis) + " out of range");
  }
  const std::size_t n0 = map.axes[0].steps;
  const std::size_t n1 = map.axes.size() == 2 ? map.axes[1].steps : 1;
  const std::size_t along = axis == 0 ? n0 : n1;
  const std::size_t across = axis == 0 ? n1 : n0;
  auto at = [&](std::size_t line, std::size_t k) -> const Cell& {
    return axis == 0 ? map.cells[k * n1 + line] : map.cells[line * n1 + k];
  };

  std::vector<double> out;
  for (std::size_t line = 0; line < across; ++line) {
    for (std::size_t k = 0; k + 1 < along; ++k) {
      const Cell& a = at(line, k);
      const Cell& b = at(line, k + 1);
      if (a.label && b.label && *a.label != *b.label) {
        out.push_back((a.coords[axis] + b.coords[axis]) / 2.0);
      }
    }
  }
  if (out.empty()) {
    throw Error(ErrorCode::NoBoundary,
                "no label change along axis '" + map.axes[axis].param_name +
                    "'");
  }
  return out;
}

std::string emit_csv(const RegionMap& map) {
  std::string out = "axis1,axis2,outcome,asi_value,human_value\n";
  for (const auto& cell : map.cells) {
    out += fixed6(cell.coords.at(0));
    out += ',';
    out += cell.coords.size() > 1 ? fixed6(cell.coords[1]) : "-";
    out += ',';
    out += label_text(cell.label);
    out += ',';
    out += cell.label ? fixed6(cell.asi_value) : "nan";
    out += ',';
    out += cell.label ? fixed6(cell.human_value) : "nan";
    out += '\n';
  }
  return out;
}

std::string_view cell_colour(std::optional<OutcomeLabel> label) {
  if (!label) return "#d9d9d9";
  switch (*label) {
    case OutcomeLabel::Trade: return "#2ca02c";
    case OutcomeLabel::StealUnsanctioned: return "#d62728";
    case OutcomeLabel::Skim: return "#1f77b4";
    case OutcomeLabel::StealThenFlight: return "#ff7f0e";
    case OutcomeLabel::Tax: return "#9467bd";
    case OutcomeLabel::StealThenSubsist: return "#8c564b";
    case OutcomeLabel::CreditTrade: return "#17becf";
    case OutcomeLabel::Ignore: return "#7f7f7f";
  }
  return "#000000";
}

std::string emit_svg(const RegionMap& map) {
  constexpr double kLeft = 80, kTop = 20, kPlotW = 600;
  constexpr double kLegendGap = 20, kSwatch = 12, kLegendRow = 18;
  const bool two_d = map.axes.size() == 2;
  const double plot_h = two_d ? 400 : 40;
  const std::size_t n0 = map.axes.at(0).steps;
  const std::size_t n1 = two_d ? map.axes[1].steps : 1;
  const double cw = kPlotW / static_cast<double>(n0);
  const double ch = plot_h / static_cast<double>(n1);

  // Legend lists present labels in palette order, Infeasible last.
  std::vector<std::optional<OutcomeLabel>> present;
  for (int l = 0; l <= static_cast<int>(OutcomeLabel::Ignore); ++l) {
    const auto label = static_cast<OutcomeLabel>(l);
    if (std::any_of(map.cells.begin(), map.cells.end(),
                    [&](const Cell& c) { return c.label == label; })) {
      present.emplace_back(label);
    }
  }
  if (std::any_of(map.cells.begin(), map.cells.end(),
                  [](const Cell& c) { return !c.label; })) {
    present.emplace_back(std::nullopt);
  }

  const double legend_x = kLeft + kPlotW + kLegendGap;
  const double width = legend_x + 160;
  const double height =
      std::max(kTop + plot_h + 50,
               kTop + 20 + kLegendRow * static_cast<double>(present.size()) +
                   20);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed3(width) +
         "\" height=\"" + fixed3(height) + "\" viewBox=\"0 0 " +
         fixed3(width) + " " + fixed3(height) + "\">\n";
  out += "<title>" + xml_escape(scenarios::to_string(map.scenario)) +
         " outcome regions</title>\n";

  out += "<g id=\"cells\" shape-rendering=\"crispEdges\">\n";
  for (std::size_t i0 = 0; i0 < n0; ++i0) {
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
      const Cell& cell = map.cells[i0 * n1 + i1];
      const double x = kLeft + cw * static_cast<double>(i0);
      const double y = kTop + ch * static_cast<double>(n1 - 1 - i1);
      out += "<rect class=\"cell\" x=\"" + fixed3(x) + "\" y=\"" + fixed3(y) +
             "\" width=\"" + fixed3(cw) + "\" height=\"" + fixed3(ch) +
             "\" fill=\"" + std::string(cell_colour(cell.label)) + "\"/>\n";
    }
  }
  out += "</g>\n";

  const AxisSpec& ax = map.axes[0];
  const double base_y = kTop + plot_h;
  out += "<g id=\"axes\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect x=\"" + fixed3(kLeft) + "\" y=\"" + fixed3(kTop) +
         "\" width=\"" + fixed3(kPlotW) + "\" height=\"" + fixed3(plot_h) +
         "\" fill=\"none\" stroke=\"#000000\"/>\n";
  out += "<text x=\"" + fixed3(kLeft) + "\" y=\"" + fixed3(base_y + 16) +
         "\" text-anchor=\"start\">" + fixed6(ax.lo) + "</text>\n";
  out += "<text x=\"" + fixed3(kLeft + kPlotW) + "\" y=\"" +
         fixed3(base_y + 16) + "\" text-anchor=\"end\">" + fixed6(ax.hi) +
         "</text>\n";
  out += "<text x=\"" + fixed3(kLeft + kPlotW / 2) + "\" y=\"" +
         fixed3(base_y + 36) + "\" text-anchor=\"middle\">" +
         xml_escape(ax.param_name) + "</text>\n";
  if (two_d) {
    const AxisSpec& ay = map.axes[1];
    out += "<text x=\"" + fixed3(kLeft - 6) + "\" y=\"" + fixed3(base_y) +
           "\" text-anchor=\"end\">" + fixed6(ay.lo) + "</text>\n";
    out += "<text x=\"" + fixed3(kLeft - 6) + "\" y=\"" + fixed3(kTop + 12) +
           "\" text-anchor=\"end\">" + fixed6(ay.hi) + "</text>\n";
    const double mid_y = kTop + plot_h / 2;
    out += "<text x=\"" + fixed3(kLeft - 40) + "\" y=\"" + fixed3(mid_y) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 " +
           fixed3(kLeft - 40) + " " + fixed3(mid_y) + ")\">" +
           xml_escape(ay.param_name) + "</text>\n";
  }
  out += "</g>\n";

  out += "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t k = 0; k < present.size(); ++k) {
    const double y = kTop + kLegendRow * static_cast<double>(k);
    out += "<rect class=\"legend-swatch\" x=\"" + fixed3(legend_x) +
           "\" y=\"" + fixed3(y) + "\" width=\"" + fixed3(kSwatch) +
           "\" height=\"" + fixed3(kSwatch) + "\" fill=\"" +
           std::string(cell_colour(present[k])) + "\"/>\n";
    out += "<text x=\"" + fixed3(legend_x + kSwatch + 6) + "\" y=\"" +
           fixed3(y + 10) + "\">" + std::string(label_text(present[k])) +
           "</text>\n";
  }
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace predation::sweep
