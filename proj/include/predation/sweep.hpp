#pragma once

// Parameter sweeps over one or two axes, phase-boundary estimates, and
// CSV/SVG emission of the resulting outcome regions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "predation/kernels.hpp"
#include "predation/scenarios.hpp"

namespace predation::sweep {

struct AxisSpec {
  std::string param_name;
  double lo = 0;
  double hi = 0;
  std::size_t steps = 0;

  // Coordinate i of `steps`; both endpoints are hit exactly.
  double coordinate(std::size_t i) const;
  bool operator==(const AxisSpec&) const = default;
};

struct Cell {
  std::vector<double> coords;
  std::optional<scenarios::OutcomeLabel> label;  // empty = Infeasible
  double asi_value = 0;
  double human_value = 0;
};

// Cells are row-major: for two axes, index = i0 * axes[1].steps + i1.
struct RegionMap {
  scenarios::ScenarioKind scenario{};
  std::vector<AxisSpec> axes;
  std::vector<Cell> cells;
};

struct SweepOptions {
  // Classify scanlines along the ASI discount axis with the batch kernels.
  bool batch_discount_lines = true;
  const kernels::KernelSet* kernels = nullptr;  // null = active_kernels()
  std::size_t threads = 0;                      // 0 = hardware concurrency
};

// Throws Error{InvalidParams} for an invalid base, Error{UnknownParam} for an
// axis naming no field, Error{EmptyGrid} for zero or more than two axes,
// fewer than two steps, or lo >= hi.
RegionMap run_sweep(const scenarios::ScenarioParams& base,
                    const std::vector<AxisSpec>& axes,
                    const SweepOptions& options = {});

// Midpoints between consecutive feasible cells whose labels differ, per
// scanline along `axis`. Throws Error{NoBoundary} when there are none.
std::vector<double> boundary_estimate(const RegionMap& map, std::size_t axis);

std::string emit_csv(const RegionMap& map);
std::string emit_svg(const RegionMap& map);

// Fill colour per outcome; Infeasible is the empty label.
std::string_view cell_colour(std::optional<scenarios::OutcomeLabel> label);

}  // namespace predation::sweep
