#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "ellk/hodge/filters.hpp"

using namespace ellk;

namespace {

HodgeDiamond level_zero(std::vector<std::int64_t> evens) { return diamond_from_betti(BettiVector::from_even(evens), 4); }

const HodgeDiamond diamond_a = level_zero({1, 1, 1, 1, 1});
const HodgeDiamond diamond_b = level_zero({1, 1, 2, 1, 1});
const HodgeDiamond diamond_d = level_zero({1, 2, 3, 2, 1});
const HodgeDiamond diamond_g = HodgeDiamond::fourfold(1, 2, 0, 2, 2);
const HodgeDiamond b2_three = HodgeDiamond::fourfold(1, 1, 0, 1, 2);

/// signature straight from the definition, summing over the full table
std::int64_t signature_oracle(const HodgeDiamond& d) {
  std::int64_t s = 0;
  for (int p = 0; p <= d.n; ++p)
    for (int q = 0; q <= d.n; ++q) s += ((q & 1) ? -d.h[p][q] : d.h[p][q]);
  return s;
}

}  // namespace

TEST_CASE("diamond validation", "[hodge]") {
  CHECK(validate_diamond(diamond_a).ok());
  CHECK(validate_diamond(diamond_g).ok());
  auto bad = diamond_a;
  bad.set(1, 1, 1);
  bad.set(2, 0, 1);
  auto rep = validate_diamond(bad);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().rfind("conjugation", 0) == 0);
  auto unnormalized = diamond_a;
  unnormalized.set(4, 4, 2);
  CHECK_FALSE(validate_diamond(unnormalized).ok());
  auto negative = HodgeDiamond::fourfold(0, 1, 0, -1, 1);
  CHECK_FALSE(validate_diamond(negative).ok());
}

TEST_CASE("diamonds from Betti numbers", "[hodge]") {
  CHECK(diamond_a.at(2, 2) == 1);
  auto c = level_zero({1, 2, 2, 2, 1});
  CHECK(c.at(1, 1) == 2);
  CHECK(c.at(2, 0) == 0);
  auto f = level_zero({1, 4, 6, 4, 1});
  CHECK(f.at(2, 2) == 6);
  CHECK(f.betti().even_part() == std::vector<std::int64_t>{1, 4, 6, 4, 1});
  CHECK_THROWS_AS(diamond_from_betti(BettiVector{{1, 1, 1}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(diamond_from_betti(BettiVector::from_even({1, 2, 1, 1, 1}), 4), std::invalid_argument);
}

TEST_CASE("row sums recover Betti numbers", "[hodge][property]") {
  for (auto evens : std::vector<std::vector<std::int64_t>>{
           {1, 1, 1, 1, 1}, {1, 2, 3, 2, 1}, {1, 4, 6, 4, 1}, {1, 1, 1}, {1, 3, 3, 1}, {1, 0, 5, 0, 1}}) {
    const int n = static_cast<int>(evens.size()) - 1;
    auto d = diamond_from_betti(BettiVector::from_even(evens), n);
    CHECK(d.betti() == BettiVector::from_even(evens));
    for (int k = 0; k <= 2 * n; ++k)
      CHECK(hodge_level(d, k) == (d.betti()[static_cast<std::size_t>(k)] > 0 ? 0 : kLevelNegInfinity));
  }
}

TEST_CASE("Hard Lefschetz on Betti numbers", "[hodge]") {
  CHECK_FALSE(hard_lefschetz_admissible(BettiVector::from_even({1, 1, 0, 1, 1})));
  CHECK(hard_lefschetz_admissible(BettiVector::from_even({1, 2, 3, 2, 1})));
  CHECK(hard_lefschetz_admissible(BettiVector::from_even({1, 1, 1, 1, 1})));
  CHECK_FALSE(hard_lefschetz_admissible(BettiVector{{1, 2, 0, 1, 0, 2, 1}}));
}

TEST_CASE("signatures", "[hodge]") {
  CHECK(signature(b2_three) == 4);
  CHECK(signature(diamond_b) == 2);
  CHECK(signature(diamond_g) == 0);
  for (auto evens : std::vector<std::vector<std::int64_t>>{
           {1, 1, 1, 1, 1}, {1, 1, 2, 1, 1}, {1, 2, 2, 2, 1}, {1, 2, 3, 2, 1}, {1, 3, 4, 3, 1}, {1, 4, 6, 4, 1}}) {
    auto d = level_zero(evens);
    CHECK(signature(d) == signature_oracle(d));
    CHECK(signature(d) == evens[0] - evens[1] + evens[2] - evens[3] + evens[4]);
  }
  CHECK(signature(diamond_g) == signature_oracle(diamond_g));
  CHECK_THROWS_AS(signature(HodgeDiamond::zero(3)), std::invalid_argument);
}

TEST_CASE("Hodge level", "[hodge]") {
  CHECK(hodge_level(diamond_g, 4) == 2);
  CHECK(hodge_level(diamond_g, 2) == 2);
  CHECK(hodge_level(diamond_a, 4) == 0);
  CHECK(hodge_level(diamond_a, 3) == kLevelNegInfinity);
  CHECK_THROWS_AS(hodge_level(diamond_a, 9), std::invalid_argument);
}

TEST_CASE("geometric genus filter", "[hodge]") {
  CHECK_FALSE(geometric_genus_filter(HodgeDiamond::fourfold(0, 1, 1, 0, 1)));
  CHECK(geometric_genus_filter(diamond_g));
  for (auto evens : std::vector<std::vector<std::int64_t>>{{1, 1, 1, 1, 1}, {1, 4, 6, 4, 1}})
    CHECK(geometric_genus_filter(level_zero(evens)));
  CHECK_FALSE(geometric_genus_filter(HodgeDiamond::fourfold(2, 1, 0, 2, 2)));  // h^{0,0} != h^{0,2}
}

TEST_CASE("Hodge-Riemann filter", "[hodge]") {
  CHECK_FALSE(hodge_riemann_filter(b2_three));
  CHECK(hodge_riemann_filter(diamond_g));
  CHECK(hodge_riemann_filter(diamond_a));
  CHECK_THROWS_AS(hodge_riemann_filter(HodgeDiamond::zero(2)), std::invalid_argument);
}

TEST_CASE("level bound", "[hodge]") {
  CHECK(level_bound_check(diamond_g));
  CHECK(level_bound_check(diamond_d));
  auto cubic = HodgeDiamond::fourfold(0, 1, 0, 1, 21);
  CHECK(first_positive_level(cubic) == 4);
  CHECK_FALSE(level_bound_check(cubic));
}

TEST_CASE("positive-level shapes", "[hodge]") {
  auto middle = [](const HodgeDiamond& d) { return d.row(4); };
  auto four = enumerate_positive_level_diamonds(4, 6, 1);
  REQUIRE(four.size() == 2);
  CHECK(middle(four[0]) == std::vector<std::int64_t>{0, 1, 4, 1, 0});
  CHECK(middle(four[1]) == std::vector<std::int64_t>{0, 2, 2, 2, 0});
  CHECK(four[1] == diamond_g);
  auto three = enumerate_positive_level_diamonds(3, 4, 1);
  REQUIRE(three.size() == 1);
  CHECK(middle(three[0]) == std::vector<std::int64_t>{0, 1, 2, 1, 0});
  CHECK(three[0] == b2_three);
  CHECK(enumerate_positive_level_diamonds(2, 2, 1).empty());
  CHECK(enumerate_positive_level_diamonds(4, 6, 0).empty());
  for (std::int64_t b2 = 1; b2 <= 8; ++b2)
    for (std::int64_t b4 = 1; b4 <= 30; ++b4)
      for (std::int64_t h20 = 1; h20 <= 3; ++h20)
        for (const auto& d : enumerate_positive_level_diamonds(b2, b4, h20)) {
          CHECK(validate_diamond(d).ok());
          CHECK(geometric_genus_filter(d));
          CHECK(d.betti()[2] == b2);
          CHECK(d.betti()[4] == b4);
        }
}

TEST_CASE("rendering", "[hodge]") {
  CHECK(diamond_a.render(true) ==
        "    1\n"
        "  0 1 0\n"
        "0 0 1 0 0\n"
        "  0 1 0\n"
        "    1\n");
  CHECK(diamond_g.render(true) ==
        "    1\n"
        "  1 2 1\n"
        "0 2 2 2 0\n"
        "  1 2 1\n"
        "    1\n");
  CHECK(diamond_from_betti(BettiVector::from_even({1, 1, 1}), 2).render() ==
        "  1\n"
        " 0 0\n"
        "0 1 0\n"
        " 0 0\n"
        "  1\n");
}
