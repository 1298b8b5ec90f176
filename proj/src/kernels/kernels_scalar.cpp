#include <cstddef>

#include "kernels_impl.hpp"

namespace predation::kernels::detail {

void constant_pdv_scalar(double x, std::span<const double> deltas,
                         std::span<double> out) {
  const double cycle_sum = 0.0 + x;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    out[i] = 0.0 + cycle_sum / (1.0 - deltas[i]);
  }
}

void switching_pdv_scalar(double first, double rest,
                          std::span<const double> deltas,
                          std::span<double> out) {
  const double head = 0.0 + first;
  const double cycle_sum = 0.0 + rest;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double d = deltas[i];
    out[i] = head + d * cycle_sum / (1.0 - d);
  }
}

void restraint_mask_scalar(double S_a, double T_a, double s_a,
                           std::span<const double> deltas,
                           std::span<std::uint8_t> out) {
  const double loss = S_a - s_a;
  const double gain = S_a - T_a;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    out[i] = deltas[i] * loss >= gain ? 1 : 0;
  }
}

}  // namespace predation::kernels::detail
