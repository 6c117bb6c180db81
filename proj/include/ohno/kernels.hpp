#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ohno/double_double.hpp"
#include "ohno/word.hpp"

namespace ohno::kernels {

/// One truncated power-series job. Starting from the constant series 1,
/// the letters (lower endpoint first) are integrated in turn:
///   X: c_n <- c_n / n
///   Y: c_n <- (c_0 + ... + c_{n-1}) / n
/// After each letter the series is summed at x = 1/2 over n = 1..terms.
/// prefix[j] receives the value after j letters (prefix[0] = 1), so
/// prefix.size() must be letters.size() + 1.
struct SeriesJob {
  std::span<const Letter> letters;
  int terms = 0;
  std::span<DoubleDouble> prefix;
};

enum class KernelKind { Auto, Scalar, Avx2 };

using SeriesKernel = void (*)(std::span<const SeriesJob> jobs);

/// Reference implementation; defines the result bits every variant must
/// reproduce.
void run_scalar(std::span<const SeriesJob> jobs);

/// Four jobs per AVX2 register, one per lane. Bit-identical to run_scalar.
/// Only callable when avx2_available().
void run_avx2(std::span<const SeriesJob> jobs);

/// True when the AVX2 variant was compiled in and the CPU supports AVX2+FMA.
bool avx2_available();

/// Auto resolves to the widest available variant. Requesting Avx2 on a
/// machine without it falls back to Scalar.
KernelKind resolve(KernelKind requested);
SeriesKernel select(KernelKind requested);
std::string_view name(KernelKind kind);
/// Parses "auto", "scalar" or "avx2"; throws ConfigError otherwise.
KernelKind parse_kernel(std::string_view text);

/// Full Hölder sum at arbitrary precision:
///   sum_j P_lower[j] * P_upper[w - j]
/// where P_lower are the prefix values of `lower` and P_upper those of
/// `upper` (the letters of the dual index). Computed with MPFR at `bits`
/// of mantissa and rounded to the nearest double-double.
DoubleDouble holder_sum_mpfr(std::span<const Letter> lower, std::span<const Letter> upper, int terms,
                             long bits);

/// Double-double reciprocals 1/n for n = 0..terms (entry 0 unused).
std::vector<DoubleDouble> reciprocal_table(int terms);

}  // namespace ohno::kernels
