#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ohno/error.hpp"
#include "ohno/zeta.hpp"
#include "support.hpp"

using ohno::EvalConfig;
using ohno::Index;
using ohno::IndexCombination;

namespace {

double zeta(const Index& k, double tol = 1e-12) {
  EvalConfig cfg;
  cfg.tol = tol;
  return ohno::eval_zeta(k, cfg);
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("tolerance buckets and derived budgets") {
  CHECK(ohno::tol_bucket(1e-12) == -12);
  CHECK(ohno::tol_bucket(3e-12) == -12);
  CHECK(ohno::tol_bucket(9.9e-9) == -9);
  CHECK(ohno::tol_bucket(1e-8) == -8);
  CHECK(ohno::bucket_tolerance(-12) == 1e-12);
  // 2 ceil(log2(1e12)) + 16 = 2*40 + 16
  CHECK(ohno::required_precision_bits(-12) == 96);
  CHECK(ohno::required_precision_bits(-15) == 116);
  // smallest N with 2^-N <= 1e-12 / (4*4) is 44, plus the guard
  CHECK(ohno::series_terms(3, -12) == 44 + ohno::kTruncationGuardBits);
  CHECK_THROWS_AS((void)ohno::tol_bucket(0.0), ohno::ConfigError);
  CHECK_THROWS_AS((void)ohno::tol_bucket(-1.0), ohno::ConfigError);
}

TEST_CASE("known values") {
  CHECK(std::abs(zeta(Index{2}) - testing::pi_power_over(2, 6)) <= 1e-12);
  CHECK(std::abs(zeta(Index{1, 2}) - testing::mpfr_zeta(3)) <= 1e-12);
  CHECK(std::abs(zeta(Index{3}) - testing::mpfr_zeta(3)) <= 1e-12);
  CHECK(std::abs(zeta(Index{2, 2}) - testing::pi_power_over(4, 120)) <= 1e-12);
  // Euler's depth-2 evaluation, summation index increasing to the right:
  // zeta(2,3) = 3 zeta(2) zeta(3) - 11/2 zeta(5).
  const double z23 = 3 * testing::mpfr_zeta(2) * testing::mpfr_zeta(3) - 5.5 * testing::mpfr_zeta(5);
  CHECK(std::abs(zeta(Index{2, 3}) - z23) <= 1e-12);
  CHECK(std::abs(zeta(Index{1, 1, 2}) - testing::mpfr_zeta(4)) <= 1e-12);
}

TEST_CASE("every supported bucket meets its tolerance") {
  const double ref = testing::mpfr_zeta(5);
  for (int b = -2; b >= ohno::kFinestBucket; --b) {
    const double tol = ohno::bucket_tolerance(b);
    CHECK(std::abs(zeta(Index{5}, tol) - ref) <= tol);
    CHECK(std::abs(zeta(Index{1, 1, 1, 2}, tol) - ref) <= tol);
  }
}

TEST_CASE("non-admissible and empty indices are rejected") {
  CHECK_THROWS_AS((void)zeta(Index{2, 1}), ohno::DomainError);
  CHECK_THROWS_AS((void)zeta(Index{}), ohno::DomainError);
  CHECK_THROWS_AS((void)ohno::eval_combination(IndexCombination(Index{1})), ohno::DomainError);
}

TEST_CASE("budget failures are explicit") {
  EvalConfig cfg;
  cfg.max_terms = 20;
  CHECK_THROWS_AS((void)ohno::eval_zeta(Index{3}, cfg), ohno::PrecisionError);
  cfg = {};
  cfg.tol = 1e-17;
  CHECK_THROWS_AS((void)ohno::eval_zeta(Index{3}, cfg), ohno::PrecisionError);
  cfg = {};
  cfg.working_precision = 64;
  CHECK_THROWS_AS((void)ohno::eval_zeta(Index{3}, cfg), ohno::ConfigError);
  cfg.working_precision = 200;
  CHECK(std::abs(ohno::eval_zeta(Index{3}, cfg) - testing::mpfr_zeta(3)) <= 1e-12);
}

TEST_CASE("direct summation examples") {
  const auto d2 = ohno::eval_zeta_direct(Index{2}, 1000);
  CHECK(d2.value == doctest::Approx(1.6439345).epsilon(1e-7));
  CHECK(d2.tail_bound >= testing::pi_power_over(2, 6) - d2.value);
  CHECK(d2.tail_bound < 2e-3);

  const auto d3 = ohno::eval_zeta_direct(Index{3}, 100);
  CHECK(d3.value == doctest::Approx(1.2020074).epsilon(1e-7));
  CHECK(d3.tail_bound >= testing::mpfr_zeta(3) - d3.value);

  CHECK_THROWS_AS((void)ohno::eval_zeta_direct(Index{1, 2}, 1), ohno::DomainError);
  CHECK_THROWS_AS((void)ohno::eval_zeta_direct(Index{2, 1}, 100), ohno::DomainError);
}

TEST_CASE("direct tail bounds are valid for deeper indices") {
  // The exact value comes from the Hölder evaluator at 1e-15; the bound must
  // cover the true remainder at several cut-offs.
  for (const Index& k : {Index{1, 2}, Index{1, 1, 2}, Index{2, 2}, Index{1, 3}, Index{1, 1, 1, 3}}) {
    const double exact = zeta(k, 1e-15);
    for (std::int64_t N : {10, 100, 1000}) {
      const auto d = ohno::eval_zeta_direct(k, N);
      CHECK(exact - d.value >= 0.0);
      CHECK(d.tail_bound >= exact - d.value - 1e-14);
    }
  }
}

TEST_CASE("oracle agreement up to weight 5") {
  for (int w = 2; w <= 5; ++w) {
    for (const auto& k : ohno::admissible_indices(w)) {
      const auto d = ohno::eval_zeta_direct(k, 2000);
      CAPTURE(k.to_string());
      CHECK(std::abs(zeta(k) - d.value) <= d.tail_bound + 1e-12);
    }
  }
}

TEST_CASE("combination examples") {
  IndexCombination diff;
  diff.add(Index{3}, 1);
  diff.add(Index{1, 2}, -1);
  CHECK(std::abs(ohno::eval_combination(diff)) <= 1e-12);
  CHECK(ohno::eval_combination(IndexCombination()) == 0.0);
  CHECK(std::abs(ohno::eval_combination(IndexCombination(Index{2}, 2)) - 2 * testing::pi_power_over(2, 6)) <= 1e-12);
}

TEST_CASE("single-entry harmonic product") {
  EvalConfig cfg;
  const ohno::ZetaEvaluator z(cfg);
  for (int k : {2, 3}) {
    for (const Index& l : {Index{2}, Index{3}, Index{1, 2}}) {
      const auto star = ohno::star_single(k, IndexCombination(l));
      const double lhs = z.zeta(Index{k}) * z.zeta(l);
      // product error <= tol (|a| + |b| + tol); sum side <= tol
      const double budget = cfg.tol * (z.zeta(Index{k}) + z.zeta(l) + 1.0) + cfg.tol;
      CAPTURE(k);
      CAPTURE(l.to_string());
      CHECK(std::abs(lhs - z.combination(star)) <= budget);
    }
  }
}

TEST_CASE("evaluation is deterministic and the cache is transparent") {
  const auto cache = std::make_shared<ohno::ZetaCache>();
  const ohno::ZetaEvaluator cached(EvalConfig{}, cache);
  const ohno::ZetaEvaluator plain(EvalConfig{});
  for (int w = 2; w <= 7; ++w) {
    for (const auto& k : ohno::admissible_indices(w)) {
      const double a = plain.zeta(k);
      CHECK(a == plain.zeta(k));
      CHECK(a == cached.zeta(k));
      CHECK(a == cached.zeta(k));
    }
  }
  CHECK(cache->hits() > 0);
  CHECK(cache->size() == 63);
}

TEST_CASE("cache buckets are kept apart") {
  const auto cache = std::make_shared<ohno::ZetaCache>();
  EvalConfig coarse;
  coarse.tol = 1e-6;
  const double c = ohno::ZetaEvaluator(coarse, cache).zeta(Index{3});
  const double f = ohno::ZetaEvaluator(EvalConfig{}, cache).zeta(Index{3});
  CHECK(cache->size() == 2);
  CHECK(c == ohno::eval_zeta(Index{3}, coarse));
  CHECK(f == ohno::eval_zeta(Index{3}));
}

TEST_CASE("batched evaluation matches single evaluation") {
  const ohno::ZetaEvaluator z;
  const auto all = ohno::admissible_indices(7);
  const auto batch = z.zeta(std::span<const Index>(all));
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(batch[i] == z.zeta(all[i]));
}

TEST_CASE("cache file round trip is bit-exact") {
  const auto path = temp_file("ohno_cache_roundtrip.tsv");
  std::filesystem::remove(path);
  ohno::ZetaCache saved;
  const auto cache = std::make_shared<ohno::ZetaCache>();
  const ohno::ZetaEvaluator z(EvalConfig{}, cache);
  for (const auto& k : ohno::admissible_indices(6)) (void)z.zeta(k);
  cache->save(path);

  ohno::ZetaCache loaded;
  loaded.load(path);
  CHECK(loaded.size() == cache->size());
  for (const auto& k : ohno::admissible_indices(6)) {
    REQUIRE(loaded.find(k, -12).has_value());
    CHECK(*loaded.find(k, -12) == z.zeta(k));
  }

  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(std::count(line.begin(), line.end(), '\t') == 2);
  std::filesystem::remove(path);
}

TEST_CASE("cache loading tolerates a missing file and rejects garbage") {
  const auto path = temp_file("ohno_cache_garbage.tsv");
  std::filesystem::remove(path);
  ohno::ZetaCache cache;
  CHECK_NOTHROW(cache.load(path));
  CHECK(cache.size() == 0);
  {
    std::ofstream out(path);
    out << "3\t1e-12\t0x1.33ba004f00621p+0\nnot a line\n";
  }
  CHECK_THROWS_AS(cache.load(path), ohno::ConfigError);
  std::filesystem::remove(path);
}

TEST_CASE("double-double and MPFR paths agree") {
  EvalConfig dd;
  dd.tol = 1e-14;
  EvalConfig mp;
  mp.tol = 1e-15;  // 116 bits, beyond double-double
  for (int w = 2; w <= 8; ++w) {
    for (const auto& k : ohno::admissible_indices(w)) {
      CHECK(std::abs(ohno::eval_zeta(k, dd) - ohno::eval_zeta(k, mp)) <= 2e-14);
    }
  }
}
