#include <algorithm>
#include <cmath>

#include "ohno/kernels.hpp"

namespace ohno::kernels {

std::vector<DoubleDouble> reciprocal_table(int terms) {
  std::vector<DoubleDouble> inv(static_cast<std::size_t>(terms) + 1);
  for (int n = 1; n <= terms; ++n) inv[static_cast<std::size_t>(n)] = dd::reciprocal(n);
  return inv;
}

namespace {

void run_one(const SeriesJob& job, std::span<const DoubleDouble> inv) {
  const auto terms = static_cast<std::size_t>(job.terms);
  std::vector<DoubleDouble> c(terms + 1);
  c[0] = 1.0;
  job.prefix[0] = 1.0;
  for (std::size_t j = 0; j < job.letters.size(); ++j) {
    DoubleDouble running;
    DoubleDouble prev = c[0];
    c[0] = 0.0;
    if (job.letters[j] == Letter::Y) {
      for (std::size_t n = 1; n <= terms; ++n) {
        running = dd::add(running, prev);
        prev = c[n];
        c[n] = dd::mul(running, inv[n]);
      }
    } else {
      for (std::size_t n = 1; n <= terms; ++n) c[n] = dd::mul(c[n], inv[n]);
    }
    DoubleDouble value;
    for (std::size_t n = 1; n <= terms; ++n) {
      const double pw = std::ldexp(1.0, -static_cast<int>(n));
      value = dd::add(value, DoubleDouble(c[n].hi * pw, c[n].lo * pw));
    }
    job.prefix[j + 1] = value;
  }
}

}  // namespace

void run_scalar(std::span<const SeriesJob> jobs) {
  int max_terms = 0;
  for (const auto& job : jobs) max_terms = std::max(max_terms, job.terms);
  const auto inv = reciprocal_table(max_terms);
  for (const auto& job : jobs) run_one(job, inv);
}

}  // namespace ohno::kernels
