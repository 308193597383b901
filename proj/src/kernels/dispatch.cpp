#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qqpt/kernels.hpp"

namespace qqpt::kernels {

std::string_view to_string(KernelVariant v) {
  switch (v) {
    case KernelVariant::Auto: return "auto";
    case KernelVariant::Scalar: return "scalar";
    case KernelVariant::Avx2: return "avx2";
  }
  return "unknown";
}

KernelVariant parse_kernel_variant(std::string_view name) {
  if (name == "auto") return KernelVariant::Auto;
  if (name == "scalar") return KernelVariant::Scalar;
  if (name == "avx2") return KernelVariant::Avx2;
  throw std::invalid_argument("unknown kernel variant '" + std::string(name) + "'");
}

bool kernel_available(KernelVariant v) {
  switch (v) {
    case KernelVariant::Auto:
    case KernelVariant::Scalar:
      return true;
    case KernelVariant::Avx2:
#if defined(QQPT_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

KernelVariant resolve_kernel(KernelVariant requested) {
  if (requested == KernelVariant::Auto) {
    if (const char* env = std::getenv("QQPT_KERNEL"); env != nullptr && *env != '\0') {
      requested = parse_kernel_variant(env);
    }
  }
  if (requested == KernelVariant::Auto) {
    return kernel_available(KernelVariant::Avx2) ? KernelVariant::Avx2 : KernelVariant::Scalar;
  }
  if (!kernel_available(requested)) {
    throw std::runtime_error("kernel variant '" + std::string(to_string(requested)) + "' not available on this CPU");
  }
  return requested;
}

Rk4StepFn rk4_step_kernel(KernelVariant v) {
  switch (resolve_kernel(v)) {
#if defined(QQPT_HAVE_AVX2_KERNEL)
    case KernelVariant::Avx2: return &rk4_step_avx2;
#endif
    default: return &rk4_step_scalar;
  }
}

}  // namespace qqpt::kernels
