#include <doctest.h>

#include <set>

#include "ohno/error.hpp"
#include "ohno/index.hpp"

using ohno::Index;

TEST_CASE("weight, depth and admissibility") {
  CHECK(Index{1, 3}.weight() == 4);
  CHECK(Index{}.weight() == 0);
  CHECK(Index{2, 2, 2}.weight() == 6);
  CHECK(Index{1, 3}.depth() == 2);
  CHECK(Index{1, 2}.admissible());
  CHECK_FALSE(Index{2, 1}.admissible());
  CHECK_FALSE(Index{}.admissible());
  CHECK_THROWS_AS(Index({0, 2}), ohno::DomainError);
}

TEST_CASE("text format") {
  CHECK(Index::parse("1,3") == Index{1, 3});
  CHECK(Index::parse(" 2 , 3 ") == Index{2, 3});
  CHECK(Index::parse("()").empty());
  CHECK(Index{1, 3}.to_string() == "1,3");
  CHECK(Index{}.to_string() == "()");
  CHECK_THROWS_AS(Index::parse("1,,2"), ohno::Error);
  CHECK_THROWS_AS(Index::parse("1,x"), ohno::Error);
  CHECK_THROWS_AS(Index::parse("0"), ohno::Error);
}

TEST_CASE("canonical order is depth first, then lexicographic") {
  CHECK(Index{5} < Index{1, 2});
  CHECK(Index{1, 3} < Index{2, 2});
  CHECK(Index{} < Index{2});
}

TEST_CASE("dual examples") {
  CHECK(ohno::dual(Index{2}) == Index{2});
  CHECK(ohno::dual(Index{3}) == Index{1, 2});
  CHECK(ohno::dual(Index{2, 3}) == Index{1, 2, 2});
  CHECK(ohno::dual(Index{1, 2}) == Index{3});
}

TEST_CASE("dual rejects non-admissible input and names it") {
  try {
    (void)ohno::dual(Index{2, 1});
    FAIL("expected DomainError");
  } catch (const ohno::DomainError& e) {
    CHECK(std::string(e.what()).find("2,1") != std::string::npos);
  }
  CHECK_THROWS_AS((void)ohno::dual(Index{}), ohno::DomainError);
}

TEST_CASE("dual is a weight-preserving involution with complementary depth (exhaustive to weight 10)") {
  std::size_t checked = 0;
  for (int w = 2; w <= 10; ++w) {
    for (const auto& k : ohno::admissible_indices(w)) {
      const auto d = ohno::dual(k);
      REQUIRE(d.admissible());
      CHECK(ohno::dual(d) == k);
      CHECK(d.weight() == k.weight());
      CHECK(d.depth() == static_cast<std::size_t>(k.weight()) - k.depth());
      ++checked;
    }
  }
  // 2^(w-2) admissible indices of weight w.
  CHECK(checked == 511);
}

TEST_CASE("admissible_indices enumerates each weight once") {
  for (int w = 2; w <= 8; ++w) {
    const auto all = ohno::admissible_indices(w);
    CHECK(all.size() == (1u << (w - 2)));
    std::set<Index> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    for (const auto& k : all) CHECK(k.weight() == w);
  }
}

TEST_CASE("oplus") {
  const int e1[] = {1, 0};
  const int e2[] = {0};
  const int e3[] = {0, 2};
  CHECK(ohno::oplus(Index{2, 3}, e1) == Index{3, 3});
  CHECK(ohno::oplus(Index{2}, e2) == Index{2});
  CHECK(ohno::oplus(Index{1, 2}, e3) == Index{1, 4});
  CHECK_THROWS_AS((void)ohno::oplus(Index{1, 2}, e2), ohno::DomainError);
}

TEST_CASE("enumerate_shifts examples and order") {
  CHECK(ohno::enumerate_shifts(2, 2) == std::vector<ohno::ShiftVector>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(ohno::enumerate_shifts(3, 0) == std::vector<ohno::ShiftVector>{{0, 0, 0}});
  CHECK(ohno::enumerate_shifts(1, 5) == std::vector<ohno::ShiftVector>{{5}});
  CHECK(ohno::enumerate_shifts(0, 0) == std::vector<ohno::ShiftVector>{{}});
  CHECK_THROWS_AS((void)ohno::enumerate_shifts(0, 1), ohno::DomainError);
}

TEST_CASE("enumerate_shifts count is C(m+r-1, r-1)") {
  for (int r = 1; r <= 6; ++r) {
    for (int m = 0; m <= 6; ++m) {
      const auto all = ohno::enumerate_shifts(r, m);
      CHECK(all.size() == ohno::binomial(m + r - 1, r - 1));
      std::set<ohno::ShiftVector> unique(all.begin(), all.end());
      CHECK(unique.size() == all.size());
      for (const auto& e : all) {
        int sum = 0;
        for (int x : e) {
          CHECK(x >= 0);
          sum += x;
        }
        CHECK(sum == m);
      }
    }
  }
}

TEST_CASE("repeat") {
  CHECK(ohno::repeat(2, 3) == Index{2, 2, 2});
  CHECK(ohno::repeat(2, 0).empty());
  CHECK(ohno::repeat(1, 2) == Index{1, 1});
}

TEST_CASE("concat") {
  CHECK(ohno::concat({Index{1}, Index{}, Index{2, 3}}) == Index{1, 2, 3});
}

TEST_CASE("binomial") {
  CHECK(ohno::binomial(5, 2) == 10);
  CHECK(ohno::binomial(4, 0) == 1);
  CHECK(ohno::binomial(3, 4) == 0);
}
