// Compiled with -mavx2 -mfma; only reached through select() after a CPU check.
#include <immintrin.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "ohno/kernels.hpp"

namespace ohno::kernels {

namespace {

struct Vdd {
  __m256d hi;
  __m256d lo;
};

inline Vdd two_sum(__m256d a, __m256d b) {
  const __m256d s = _mm256_add_pd(a, b);
  const __m256d bb = _mm256_sub_pd(s, a);
  const __m256d e = _mm256_add_pd(_mm256_sub_pd(a, _mm256_sub_pd(s, bb)), _mm256_sub_pd(b, bb));
  return {s, e};
}

inline Vdd fast_two_sum(__m256d a, __m256d b) {
  const __m256d s = _mm256_add_pd(a, b);
  const __m256d e = _mm256_sub_pd(b, _mm256_sub_pd(s, a));
  return {s, e};
}

inline Vdd add(Vdd a, Vdd b) {
  Vdd s = two_sum(a.hi, b.hi);
  const Vdd t = two_sum(a.lo, b.lo);
  s.lo = _mm256_add_pd(s.lo, t.hi);
  s = fast_two_sum(s.hi, s.lo);
  s.lo = _mm256_add_pd(s.lo, t.lo);
  return fast_two_sum(s.hi, s.lo);
}

inline Vdd mul(Vdd a, Vdd b) {
  const __m256d p = _mm256_mul_pd(a.hi, b.hi);
  __m256d e = _mm256_fmsub_pd(a.hi, b.hi, p);
  const __m256d cross = _mm256_add_pd(_mm256_mul_pd(a.hi, b.lo), _mm256_mul_pd(a.lo, b.hi));
  e = _mm256_add_pd(e, cross);
  return fast_two_sum(p, e);
}

inline Vdd blend(Vdd if_false, Vdd if_true, __m256d mask) {
  return {_mm256_blendv_pd(if_false.hi, if_true.hi, mask), _mm256_blendv_pd(if_false.lo, if_true.lo, mask)};
}

inline Vdd broadcast(DoubleDouble x) { return {_mm256_set1_pd(x.hi), _mm256_set1_pd(x.lo)}; }

constexpr std::size_t kLanes = 4;

void run_group(std::span<const SeriesJob> group, std::span<const DoubleDouble> inv) {
  std::array<std::size_t, kLanes> length{};
  std::array<double, kLanes> lane_terms{};
  std::size_t max_len = 0;
  std::size_t terms = 0;
  for (std::size_t lane = 0; lane < group.size(); ++lane) {
    length[lane] = group[lane].letters.size();
    lane_terms[lane] = group[lane].terms;
    max_len = std::max(max_len, length[lane]);
    terms = std::max(terms, static_cast<std::size_t>(group[lane].terms));
  }
  const __m256d lane_terms_v = _mm256_loadu_pd(lane_terms.data());

  std::vector<Vdd> c(terms + 1, Vdd{_mm256_setzero_pd(), _mm256_setzero_pd()});
  c[0].hi = _mm256_set1_pd(1.0);
  for (std::size_t lane = 0; lane < group.size(); ++lane) group[lane].prefix[0] = 1.0;

  for (std::size_t j = 0; j < max_len; ++j) {
    // Lanes past their word length (and padding lanes) take X; their
    // results are never stored.
    std::array<long long, kLanes> y_bits{};
    for (std::size_t lane = 0; lane < group.size(); ++lane) {
      if (j < length[lane] && group[lane].letters[j] == Letter::Y) y_bits[lane] = -1;
    }
    const __m256d is_y = _mm256_castsi256_pd(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y_bits.data())));

    Vdd running{_mm256_setzero_pd(), _mm256_setzero_pd()};
    Vdd prev = c[0];
    c[0] = Vdd{_mm256_setzero_pd(), _mm256_setzero_pd()};
    for (std::size_t n = 1; n <= terms; ++n) {
      const Vdd r = broadcast(inv[n]);
      running = add(running, prev);
      prev = c[n];
      c[n] = blend(mul(prev, r), mul(running, r), is_y);
    }

    Vdd value{_mm256_setzero_pd(), _mm256_setzero_pd()};
    for (std::size_t n = 1; n <= terms; ++n) {
      const __m256d pw = _mm256_set1_pd(std::ldexp(1.0, -static_cast<int>(n)));
      const Vdd scaled{_mm256_mul_pd(c[n].hi, pw), _mm256_mul_pd(c[n].lo, pw)};
      const __m256d active = _mm256_cmp_pd(_mm256_set1_pd(static_cast<double>(n)), lane_terms_v, _CMP_LE_OQ);
      value = blend(value, add(value, scaled), active);
    }

    alignas(32) std::array<double, kLanes> hi{};
    alignas(32) std::array<double, kLanes> lo{};
    _mm256_store_pd(hi.data(), value.hi);
    _mm256_store_pd(lo.data(), value.lo);
    for (std::size_t lane = 0; lane < group.size(); ++lane) {
      if (j < length[lane]) group[lane].prefix[j + 1] = DoubleDouble(hi[lane], lo[lane]);
    }
  }
}

}  // namespace

void run_avx2(std::span<const SeriesJob> jobs) {
  int max_terms = 0;
  for (const auto& job : jobs) max_terms = std::max(max_terms, job.terms);
  const auto inv = reciprocal_table(max_terms);
  for (std::size_t start = 0; start < jobs.size(); start += kLanes) {
    run_group(jobs.subspan(start, std::min(kLanes, jobs.size() - start)), inv);
  }
}

}  // namespace ohno::kernels
