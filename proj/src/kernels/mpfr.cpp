#include <mpfr.h>

#include <vector>

#include "ohno/kernels.hpp"

namespace ohno::kernels {

namespace {

class Mp {
 public:
  explicit Mp(long bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Mp(const Mp& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mp& operator=(const Mp& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Mp() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

std::vector<Mp> prefix_values(std::span<const Letter> letters, int terms, long bits) {
  const auto n_terms = static_cast<std::size_t>(terms);
  std::vector<Mp> c(n_terms + 1, Mp(bits));
  mpfr_set_ui(c[0].get(), 1, MPFR_RNDN);
  std::vector<Mp> out(letters.size() + 1, Mp(bits));
  mpfr_set_ui(out[0].get(), 1, MPFR_RNDN);
  Mp running(bits);
  Mp prev(bits);
  Mp term(bits);
  for (std::size_t j = 0; j < letters.size(); ++j) {
    if (letters[j] == Letter::Y) {
      mpfr_set_zero(running.get(), 1);
      mpfr_set(prev.get(), c[0].get(), MPFR_RNDN);
      mpfr_set_zero(c[0].get(), 1);
      for (std::size_t n = 1; n <= n_terms; ++n) {
        mpfr_add(running.get(), running.get(), prev.get(), MPFR_RNDN);
        mpfr_set(prev.get(), c[n].get(), MPFR_RNDN);
        mpfr_div_ui(c[n].get(), running.get(), n, MPFR_RNDN);
      }
    } else {
      mpfr_set_zero(c[0].get(), 1);
      for (std::size_t n = 1; n <= n_terms; ++n) mpfr_div_ui(c[n].get(), c[n].get(), n, MPFR_RNDN);
    }
    Mp& value = out[j + 1];
    mpfr_set_zero(value.get(), 1);
    for (std::size_t n = 1; n <= n_terms; ++n) {
      mpfr_div_2ui(term.get(), c[n].get(), n, MPFR_RNDN);
      mpfr_add(value.get(), value.get(), term.get(), MPFR_RNDN);
    }
  }
  return out;
}

}  // namespace

DoubleDouble holder_sum_mpfr(std::span<const Letter> lower, std::span<const Letter> upper, int terms,
                             long bits) {
  const auto lo_vals = prefix_values(lower, terms, bits);
  const auto up_vals = prefix_values(upper, terms, bits);
  const std::size_t w = lower.size();
  Mp total(bits);
  Mp product(bits);
  for (std::size_t j = 0; j <= w; ++j) {
    mpfr_mul(product.get(), lo_vals[j].get(), up_vals[w - j].get(), MPFR_RNDN);
    mpfr_add(total.get(), total.get(), product.get(), MPFR_RNDN);
  }
  const double hi = mpfr_get_d(total.get(), MPFR_RNDN);
  mpfr_sub_d(total.get(), total.get(), hi, MPFR_RNDN);
  const double lo = mpfr_get_d(total.get(), MPFR_RNDN);
  return dd::fast_two_sum(hi, lo);
}

}  // namespace ohno::kernels
