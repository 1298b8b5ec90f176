#pragma once

// Batched evaluation of the repeated-game closed forms over many discount
// factors at once. Each kernel has a scalar reference and, on x86-64, an AVX2
// variant chosen at runtime. Every variant performs the same IEEE operations
// in the same order as the scalar functions in repeated.hpp, so results are
// bit-identical to `pdv` and `prefers_restraint`.

#include <cstdint>
#include <span>
#include <string_view>

namespace predation::kernels {

struct KernelSet {
  std::string_view name;

  // out[i] = pdv(PayoffStream::constant(x), deltas[i])
  void (*constant_pdv)(double x, std::span<const double> deltas,
                       std::span<double> out);

  // out[i] = pdv(PayoffStream::switching(first, rest), deltas[i])
  void (*switching_pdv)(double first, double rest,
                        std::span<const double> deltas, std::span<double> out);

  // out[i] = deltas[i] * (S_a - s_a) >= S_a - T_a
  void (*restraint_mask)(double S_a, double T_a, double s_a,
                         std::span<const double> deltas,
                         std::span<std::uint8_t> out);
};

const KernelSet& scalar_kernels() noexcept;

// Null when the build target or the running CPU lacks AVX2.
const KernelSet* avx2_kernels() noexcept;

// Best set for this machine. Setting PREDATION_FORCE_SCALAR in the
// environment pins the scalar set.
const KernelSet& active_kernels() noexcept;

}  // namespace predation::kernels
