#pragma once

#include <cstdint>
#include <span>

namespace predation::kernels::detail {

void constant_pdv_scalar(double x, std::span<const double> deltas,
                         std::span<double> out);
void switching_pdv_scalar(double first, double rest,
                          std::span<const double> deltas,
                          std::span<double> out);
void restraint_mask_scalar(double S_a, double T_a, double s_a,
                           std::span<const double> deltas,
                           std::span<std::uint8_t> out);

#if defined(__x86_64__) || defined(_M_X64)
#define PREDATION_HAVE_AVX2_KERNELS 1
void constant_pdv_avx2(double x, std::span<const double> deltas,
                       std::span<double> out);
void switching_pdv_avx2(double first, double rest,
                        std::span<const double> deltas, std::span<double> out);
void restraint_mask_avx2(double S_a, double T_a, double s_a,
                         std::span<const double> deltas,
                         std::span<std::uint8_t> out);
#else
#define PREDATION_HAVE_AVX2_KERNELS 0
#endif

}  // namespace predation::kernels::detail
