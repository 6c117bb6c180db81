#include <string>

#include "ohno/error.hpp"
#include "ohno/kernels.hpp"

namespace ohno::kernels {

bool avx2_available() {
#if defined(OHNO_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported;
#else
  return false;
#endif
}

#if !defined(OHNO_HAVE_AVX2)
void run_avx2(std::span<const SeriesJob> jobs) { run_scalar(jobs); }
#endif

KernelKind resolve(KernelKind requested) {
  switch (requested) {
    case KernelKind::Scalar:
      return KernelKind::Scalar;
    case KernelKind::Auto:
    case KernelKind::Avx2:
      return avx2_available() ? KernelKind::Avx2 : KernelKind::Scalar;
  }
  return KernelKind::Scalar;
}

SeriesKernel select(KernelKind requested) {
  return resolve(requested) == KernelKind::Avx2 ? &run_avx2 : &run_scalar;
}

std::string_view name(KernelKind kind) {
  switch (kind) {
    case KernelKind::Auto:
      return "auto";
    case KernelKind::Scalar:
      return "scalar";
    case KernelKind::Avx2:
      return "avx2";
  }
  return "?";
}

KernelKind parse_kernel(std::string_view text) {
  if (text == "auto") return KernelKind::Auto;
  if (text == "scalar") return KernelKind::Scalar;
  if (text == "avx2") return KernelKind::Avx2;
  throw ConfigError("unknown kernel '" + std::string(text) + "' (expected auto, scalar or avx2)");
}

}  // namespace ohno::kernels
