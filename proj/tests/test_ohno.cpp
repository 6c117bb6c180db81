#include <doctest.h>

#include <cmath>

#include "ohno/error.hpp"
#include "ohno/ohno.hpp"
#include "support.hpp"

using ohno::EvalConfig;
using ohno::Index;
using ohno::IndexCombination;

namespace {

IndexCombination C(std::initializer_list<std::pair<Index, int>> terms) {
  IndexCombination c;
  for (const auto& [k, n] : terms) c.add(k, n);
  return c;
}

bool all_admissible(const IndexCombination& c) {
  for (const auto& [k, v] : c) {
    if (!k.admissible()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("symbolic Ohno sum examples") {
  CHECK(ohno::ohno_m_symbolic(Index{2}, 1) == IndexCombination(Index{3}));
  CHECK(ohno::ohno_m_symbolic(Index{1, 2}, 1) == C({{Index{2, 2}, 1}, {Index{1, 3}, 1}}));
  const auto c = C({{Index{1, 2}, 3}, {Index{4}, -1}});
  CHECK(ohno::ohno_m_symbolic(c, 0) == c);
  CHECK_THROWS_AS((void)ohno::ohno_m_symbolic(Index{2, 1}, 1), ohno::DomainError);
  CHECK_THROWS_AS((void)ohno::ohno_m_symbolic(Index{}, 0), ohno::DomainError);
}

TEST_CASE("symbolic Ohno sums match brute-force enumeration") {
  for (int w = 2; w <= 6; ++w) {
    for (const auto& k : ohno::admissible_indices(w)) {
      for (int m = 0; m <= 4; ++m) {
        const std::vector<int> entries(k.begin(), k.end());
        const auto sym = ohno::ohno_m_symbolic(k, m);
        CHECK(sym == testing::brute_ohno_combination(entries, m));
        long total = 0;
        for (const auto& [idx, v] : sym) total += v.get_num().get_si();
        CHECK(total == static_cast<long>(ohno::binomial(m + static_cast<int>(k.depth()) - 1,
                                                        static_cast<int>(k.depth()) - 1)));
        CHECK(all_admissible(sym));
      }
    }
  }
}

TEST_CASE("numeric Ohno sums") {
  const EvalConfig cfg;
  CHECK(std::abs(ohno::ohno_m(Index{3}, 1, cfg) - testing::mpfr_zeta(4)) <= cfg.tol);
  CHECK(std::abs(ohno::ohno_m(Index{1, 2}, 1, cfg) - testing::mpfr_zeta(4)) <= 2 * cfg.tol);
  CHECK(std::abs(ohno::ohno_m(Index{2}, 0, cfg) - testing::pi_power_over(2, 6)) <= cfg.tol);
}

TEST_CASE("truncated Ohno series") {
  const ohno::ZetaEvaluator z;
  const auto s0 = ohno::ohno_series(Index{2}, 0, z);
  REQUIRE(s0.coefficients.size() == 1);
  CHECK(s0.coefficients[0] == z.zeta(Index{2}));
  const auto s3 = ohno::ohno_series(Index{3}, 2, z);
  REQUIRE(s3.coefficients.size() == 3);
  CHECK(s3.coefficients[0] == z.zeta(Index{3}));
  CHECK(s3.coefficients[1] == z.zeta(Index{4}));
  CHECK(s3.coefficients[2] == z.zeta(Index{5}));
  const auto s12 = ohno::ohno_series(Index{1, 2}, 1, z);
  CHECK(s12.coefficients[0] == z.zeta(Index{1, 2}));
  CHECK(std::abs(s12.coefficients[1] - (z.zeta(Index{2, 2}) + z.zeta(Index{1, 3}))) <= 2e-12);
  CHECK(s12.tol == z.config().tol);
  CHECK_THROWS_AS((void)ohno::ohno_series(Index{3}, -1, z), ohno::DomainError);
}

TEST_CASE("F combinations") {
  // F_{0,0}(2;(3)) = O_0((2) sha (3)) - O_0((2) sha (1,2))
  const auto f = ohno::f_combination(2, Index{3}, 0, 0);
  const auto expected = C({{Index{2, 3}, 1}, {Index{3, 2}, 1}}) -
                        C({{Index{2, 1, 2}, 1}, {Index{1, 2, 2}, 2}});
  CHECK(f == expected);
  // (2) sha (2) is symmetric and (2) is self-dual
  CHECK(ohno::f_combination(2, Index{2}, 0, 0).empty());
  CHECK(ohno::F_ml(2, Index{2}, 0, 0) == 0.0);
  CHECK(std::isfinite(ohno::F_ml(2, Index{3}, 0, 0)));
  CHECK_THROWS_AS((void)ohno::f_combination(1, Index{3}, 0, 0), ohno::DomainError);
  CHECK_THROWS_AS((void)ohno::f_combination(2, Index{3, 1}, 0, 0), ohno::DomainError);
}

TEST_CASE("F series at l = 0 reproduces the generating-series difference") {
  const ohno::ZetaEvaluator z;
  const int s = 3;
  const Index k{2, 2};
  const auto lhs = ohno::ohno_series(ohno::sha(Index{s}, k), 3, z);
  const auto rhs = ohno::ohno_series(ohno::sha(IndexCombination(Index{s}), ohno::dual_linear(k)), 3, z);
  for (int m = 0; m <= 3; ++m) {
    CHECK(std::abs((lhs.coefficients[m] - rhs.coefficients[m]) - ohno::F_ml(s, k, 0, m, z)) <= 1e-10);
  }
}

TEST_CASE("D examples") {
  for (int s = 2; s <= 5; ++s) {
    CHECK(ohno::d_combination(s, s, 1, 1).empty());
    CHECK(ohno::D_ml(s, s, 1, 1) == 0.0);
  }
  CHECK(std::abs(ohno::D_ml(2, 3, 0, 0)) <= 1e-10);
  CHECK(std::abs(ohno::D_ml(3, 2, 1, 1)) <= 1e-10);
}

TEST_CASE("D is antisymmetric at the symbolic level") {
  for (int s = 2; s <= 4; ++s) {
    for (int t = 2; t <= 4; ++t) {
      for (int l = 0; l <= 1; ++l) {
        for (int m = 0; m <= 2; ++m) {
          const auto d = ohno::d_combination(s, t, l, m);
          CHECK(d == -ohno::d_combination(t, s, l, m));
          CHECK(all_admissible(d));
        }
      }
    }
  }
}

TEST_CASE("Hoffman sides") {
  auto sides = ohno::hoffman_sides(Index{2});
  CHECK(sides.lhs == IndexCombination(Index{3}));
  CHECK(sides.rhs == IndexCombination(Index{1, 2}));
  sides = ohno::hoffman_sides(Index{1, 2});
  CHECK(sides.lhs == C({{Index{2, 2}, 1}, {Index{1, 3}, 1}}));
  CHECK(sides.rhs == IndexCombination(Index{1, 1, 2}));
  sides = ohno::hoffman_sides(Index{3});
  CHECK(sides.lhs == IndexCombination(Index{4}));
  CHECK(sides.rhs == C({{Index{1, 3}, 1}, {Index{2, 2}, 1}}));
  for (const Index& k : {Index{2}, Index{1, 2}, Index{3}}) CHECK(std::abs(ohno::hoffman_lhs_minus_rhs(k)) <= 1e-11);
  CHECK_THROWS_AS((void)ohno::hoffman_sides(Index{2, 1}), ohno::DomainError);
}

TEST_CASE("hast shift sum splits m over the base and the argument") {
  const auto x = IndexCombination(Index{3, 2});
  CHECK(ohno::hast_shift_sum(2, x, 0) == ohno::hast(2, x));
  CHECK(ohno::hast_shift_sum(2, x, 1) == ohno::hast(3, x) + ohno::hast(2, ohno::shift_sum(x, 1)));
}
