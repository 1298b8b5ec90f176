#include "kernels_impl.hpp"

#if PREDATION_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cstddef>

#define PREDATION_AVX2 __attribute__((target("avx2")))

namespace predation::kernels::detail {

namespace {
constexpr std::size_t kLanes = 4;
}

PREDATION_AVX2
void constant_pdv_avx2(double x, std::span<const double> deltas,
                       std::span<double> out) {
  const std::size_t n = deltas.size();
  const std::size_t full = n - n % kLanes;
  const double cycle_sum = 0.0 + x;
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d num = _mm256_set1_pd(cycle_sum);

  std::size_t i = 0;
  for (; i < full; i += kLanes) {
    const __m256d d = _mm256_loadu_pd(deltas.data() + i);
    const __m256d r =
        _mm256_add_pd(zero, _mm256_div_pd(num, _mm256_sub_pd(one, d)));
    _mm256_storeu_pd(out.data() + i, r);
  }
  constant_pdv_scalar(x, deltas.subspan(i), out.subspan(i));
}

PREDATION_AVX2
void switching_pdv_avx2(double first, double rest,
                        std::span<const double> deltas,
                        std::span<double> out) {
  const std::size_t n = deltas.size();
  const std::size_t full = n - n % kLanes;
  const __m256d head = _mm256_set1_pd(0.0 + first);
  const __m256d cycle_sum = _mm256_set1_pd(0.0 + rest);
  const __m256d one = _mm256_set1_pd(1.0);

  std::size_t i = 0;
  for (; i < full; i += kLanes) {
    const __m256d d = _mm256_loadu_pd(deltas.data() + i);
    const __m256d tail =
        _mm256_div_pd(_mm256_mul_pd(d, cycle_sum), _mm256_sub_pd(one, d));
    _mm256_storeu_pd(out.data() + i, _mm256_add_pd(head, tail));
  }
  switching_pdv_scalar(first, rest, deltas.subspan(i), out.subspan(i));
}

PREDATION_AVX2
void restraint_mask_avx2(double S_a, double T_a, double s_a,
                         std::span<const double> deltas,
                         std::span<std::uint8_t> out) {
  const std::size_t n = deltas.size();
  const std::size_t full = n - n % kLanes;
  const __m256d loss = _mm256_set1_pd(S_a - s_a);
  const __m256d gain = _mm256_set1_pd(S_a - T_a);

  std::size_t i = 0;
  for (; i < full; i += kLanes) {
    const __m256d d = _mm256_loadu_pd(deltas.data() + i);
    const __m256d ge = _mm256_cmp_pd(_mm256_mul_pd(d, loss), gain, _CMP_GE_OQ);
    const int bits = _mm256_movemask_pd(ge);
    for (std::size_t lane = 0; lane < kLanes; ++lane) {
      out[i + lane] = static_cast<std::uint8_t>((bits >> lane) & 1);
    }
  }
  restraint_mask_scalar(S_a, T_a, s_a, deltas.subspan(i), out.subspan(i));
}

}  // namespace predation::kernels::detail

#endif  // PREDATION_HAVE_AVX2_KERNELS
