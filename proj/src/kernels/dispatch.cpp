#include <cstdlib>

#include "kernels_impl.hpp"
#include "predation/kernels.hpp"

namespace predation::kernels {

namespace {

const KernelSet kScalar{
    "scalar",
    &detail::constant_pdv_scalar,
    &detail::switching_pdv_scalar,
    &detail::restraint_mask_scalar,
};

#if PREDATION_HAVE_AVX2_KERNELS
const KernelSet kAvx2{
    "avx2",
    &detail::constant_pdv_avx2,
    &detail::switching_pdv_avx2,
    &detail::restraint_mask_avx2,
};

bool cpu_has_avx2() noexcept {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

}  // namespace

const KernelSet& scalar_kernels() noexcept { return kScalar; }

const KernelSet* avx2_kernels() noexcept {
#if PREDATION_HAVE_AVX2_KERNELS
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() noexcept {
  static const KernelSet* chosen = [] {
    if (std::getenv("PREDATION_FORCE_SCALAR") != nullptr) return &kScalar;
    const KernelSet* simd = avx2_kernels();
    return simd != nullptr ? simd : &kScalar;
  }();
  return *chosen;
}

}  // namespace predation::kernels
