#include "support.hpp"

#include <mpfr.h>

namespace testing {

double mpfr_zeta(unsigned n) {
  mpfr_t z;
  mpfr_init2(z, 256);
  mpfr_zeta_ui(z, n, MPFR_RNDN);
  const double out = mpfr_get_d(z, MPFR_RNDN);
  mpfr_clear(z);
  return out;
}

double pi_power_over(unsigned n, double d) {
  mpfr_t pi;
  mpfr_init2(pi, 256);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_pow_ui(pi, pi, n, MPFR_RNDN);
  mpfr_div_d(pi, pi, d, MPFR_RNDN);
  const double out = mpfr_get_d(pi, MPFR_RNDN);
  mpfr_clear(pi);
  return out;
}

namespace {

void distribute(std::vector<int>& cur, std::size_t pos, int left, std::map<ohno::Index, long>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] += left;
    ++out[ohno::Index(cur)];
    cur[pos] -= left;
    return;
  }
  for (int x = 0; x <= left; ++x) {
    cur[pos] += x;
    distribute(cur, pos + 1, left - x, out);
    cur[pos] -= x;
  }
}

}  // namespace

std::map<ohno::Index, long> brute_ohno(const std::vector<int>& k, int m) {
  std::map<ohno::Index, long> out;
  std::vector<int> cur = k;
  distribute(cur, 0, m, out);
  return out;
}

ohno::IndexCombination brute_ohno_combination(const std::vector<int>& k, int m) {
  ohno::IndexCombination c;
  for (const auto& [idx, n] : brute_ohno(k, m)) c.add(idx, n);
  return c;
}

ohno::Index random_index(std::mt19937_64& rng, int max_depth, int max_entry, bool admissible) {
  std::uniform_int_distribution<int> depth(1, max_depth);
  std::uniform_int_distribution<int> entry(1, max_entry);
  std::vector<int> e(depth(rng));
  for (auto& x : e) x = entry(rng);
  if (admissible && e.back() < 2) e.back() = 2;
  return ohno::Index(std::move(e));
}

ohno::IndexCombination random_combination(std::mt19937_64& rng, int terms, int max_depth, int max_entry,
                                          bool admissible) {
  std::uniform_int_distribution<int> count(0, terms);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  ohno::IndexCombination c;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    c.add(random_index(rng, max_depth, max_entry, admissible), ohno::Coefficient(num(rng), den(rng)));
  }
  return c;
}

}  // namespace testing
