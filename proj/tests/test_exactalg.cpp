#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "ellk/exactalg/groebner.hpp"
#include "ellk/exactalg/linalg.hpp"
#include "support/random_poly.hpp"

using namespace ellk;

namespace {

RingPtr ring_of(std::vector<std::string> names, std::vector<int> weights = {}) {
  std::vector<PolyRing::Variable> vars;
  for (std::size_t i = 0; i < names.size(); ++i) vars.push_back({names[i], weights.empty() ? 2 : weights[i]});
  return PolyRing::make(std::move(vars));
}

std::set<std::string> printed(const GroebnerBasis& gb) {
  std::set<std::string> s;
  for (const auto& g : gb.generators()) s.insert(g.to_string());
  return s;
}

/// Coefficients of prod(1 - t^b) / prod(1 - t^a) up to `up_to`, by power-series division.
std::vector<long> ci_series(const std::vector<int>& rel_degrees, const std::vector<int>& var_weights, int up_to) {
  std::vector<long> s(static_cast<std::size_t>(up_to + 1), 0);
  s[0] = 1;
  for (int b : rel_degrees)
    for (int d = up_to; d >= b; --d) s[static_cast<std::size_t>(d)] -= s[static_cast<std::size_t>(d - b)];
  for (int a : var_weights)
    for (int d = a; d <= up_to; ++d) s[static_cast<std::size_t>(d)] += s[static_cast<std::size_t>(d - a)];
  return s;
}

}  // namespace

TEST_CASE("rational literals are canonical", "[exactalg][rational]") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("weights must be positive and even", "[exactalg][ring]") {
  CHECK_THROWS_AS(PolyRing({{"x", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PolyRing({{"x", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PolyRing({{"x", 2}, {"x", 4}}), std::invalid_argument);
  CHECK_NOTHROW(PolyRing({{"w", 2}, {"x", 4}}));
}

TEST_CASE("multiply", "[exactalg][multiply]") {
  auto R = ring_of({"x", "y"});
  auto x = Polynomial::variable(R, "x"), y = Polynomial::variable(R, "y");
  CHECK((x + y) * (x - y) == x * x - y * y);

  auto p = Rational(3, 2) * x * x * y - y.pow(3);
  CHECK(Polynomial::constant(R, 1) * p == p);

  auto S = ring_of({"w", "x"});
  auto w2x2 = Polynomial::variable(S, "w", 2) * Polynomial::variable(S, "x", 2);
  CHECK(w2x2.to_string() == "w^2*x^2");
  CHECK(w2x2.homogeneous_degree() == 8);

  auto other = ring_of({"a"});
  CHECK_THROWS_AS(x * Polynomial::variable(other, "a"), std::invalid_argument);
}

TEST_CASE("polynomial printing", "[exactalg]") {
  auto R = ring_of({"w", "x"});
  auto w = Polynomial::variable(R, "w"), x = Polynomial::variable(R, "x");
  CHECK((Rational(3, 2) * w * w * x - x.pow(3)).to_string() == "3/2*w^2*x - x^3");
  CHECK((-x + Polynomial::constant(R, 0)).to_string() == "-x");
  CHECK(Polynomial(R).to_string() == "0");
}

TEST_CASE("buchberger", "[exactalg][buchberger]") {
  auto R = ring_of({"x", "y"});
  auto x = Polynomial::variable(R, "x"), y = Polynomial::variable(R, "y");

  SECTION("monomial ideal is already a basis") {
    CHECK(printed(buchberger({x.pow(2), y.pow(3)})) == std::set<std::string>{"x^2", "y^3"});
  }
  SECTION("one S-polynomial step adds y^3") {
    // y(x^2+y^2) - x(xy) = y^3
    CHECK(printed(buchberger({x * x + y * y, x * y})) == std::set<std::string>{"x^2 + y^2", "x*y", "y^3"});
  }
  SECTION("principal ideal") {
    auto W = ring_of({"w"});
    CHECK(printed(buchberger({Polynomial::variable(W, "w", 5)})) == std::set<std::string>{"w^5"});
  }
  SECTION("zeros dropped, all-zero gives empty basis") {
    CHECK(buchberger({Polynomial(R), x}).size() == 1);
    CHECK(buchberger({Polynomial(R)}).empty());
  }
  SECTION("generators are monic") {
    auto gb = buchberger({3 * x * x + y * y, Rational(2) * x * y});
    for (const auto& g : gb.generators()) CHECK(g.leading_term(gb.order()).second == 1);
  }
  SECTION("empty input is a contract violation") { CHECK_THROWS(buchberger({})); }
}

TEST_CASE("is_finite_quotient", "[exactalg]") {
  auto R = ring_of({"x", "y"});
  auto x = Polynomial::variable(R, "x"), y = Polynomial::variable(R, "y");
  auto gb = buchberger({x.pow(2), y.pow(3)});
  CHECK(is_finite_quotient(gb));
  CHECK(quotient_dimension(gb) == 6u);

  // xy - k w y is a zero divisor modulo y^2: the line y = z = 0 survives
  auto S = ring_of({"w", "x", "y", "z"});
  auto w = Polynomial::variable(S, "w"), X = Polynomial::variable(S, "x");
  auto Y = Polynomial::variable(S, "y"), Z = Polynomial::variable(S, "z");
  CHECK_FALSE(is_finite_quotient(buchberger({Y * Y, Z * Z, X * Y - w * Y, X * Z - w * Z})));

  auto W = ring_of({"w"});
  auto gw = buchberger({Polynomial::variable(W, "w", 5)});
  CHECK(is_finite_quotient(gw));
  CHECK(quotient_dimension(gw) == 5u);
}

TEST_CASE("hilbert_function", "[exactalg]") {
  auto R = ring_of({"w", "x"});
  auto w = Polynomial::variable(R, "w"), x = Polynomial::variable(R, "x");

  auto gc = buchberger({x * x + w * w, w.pow(3) * x});
  std::vector<std::size_t> c;
  for (int d = 0; d <= 8; d += 2) c.push_back(hilbert_function(gc, d));
  CHECK(c == std::vector<std::size_t>{1, 2, 2, 2, 1});
  CHECK(hilbert_function(gc, 10) == 0);
  CHECK(hilbert_function(gc, 3) == 0);
  CHECK(hilbert_function(gc, -2) == 0);

  auto W = ring_of({"w"});
  CHECK(hilbert_function(buchberger({Polynomial::variable(W, "w", 5)}), 4) == 1);

  // (1 - t^6)^2 / (1 - t^2)^2
  auto gd = buchberger({x.pow(3), w * x * x + w.pow(3)});
  std::vector<std::size_t> d;
  for (int k = 0; k <= 8; k += 2) d.push_back(hilbert_function(gd, k));
  CHECK(d == std::vector<std::size_t>{1, 2, 3, 2, 1});
}

TEST_CASE("is_regular_sequence", "[exactalg]") {
  auto R = ring_of({"w", "x"});
  auto w = Polynomial::variable(R, "w"), x = Polynomial::variable(R, "x");
  CHECK(is_regular_sequence({x * x + w * w, w.pow(3) * x}));

  auto S = ring_of({"w", "x", "y", "z"});
  auto W = Polynomial::variable(S, "w"), X = Polynomial::variable(S, "x");
  auto Y = Polynomial::variable(S, "y"), Z = Polynomial::variable(S, "z");
  CHECK_FALSE(is_regular_sequence({Y * Y, Z * Z, X * Y - W * Y, X * Z - W * Z}));

  auto O = ring_of({"w"});
  CHECK(is_regular_sequence({Polynomial::variable(O, "w", 5)}));

  SECTION("contract violations") {
    CHECK_THROWS_AS(is_regular_sequence({x * x}), std::invalid_argument);
    CHECK_THROWS_AS(is_regular_sequence({x * x + w, w * w}), std::invalid_argument);
    CHECK_THROWS_AS(is_regular_sequence({Polynomial::constant(R, 2), w * w}), std::invalid_argument);
  }
  SECTION("a zero entry is never regular") { CHECK_FALSE(is_regular_sequence({Polynomial(R), w * w})); }
}

TEST_CASE("contains_maximal_power", "[exactalg]") {
  auto R = ring_of({"w", "x"});
  auto w = Polynomial::variable(R, "w"), x = Polynomial::variable(R, "x");
  CHECK(contains_maximal_power(buchberger({x * x + w * w, w.pow(3) * x}), 5));
  CHECK(contains_maximal_power(buchberger({x.pow(3) - 2 * w.pow(3), w * x * x + w.pow(3) + 2 * w * w * x}), 5));
  CHECK_FALSE(contains_maximal_power(buchberger({w * x}), 3));
  CHECK_THROWS(contains_maximal_power(buchberger({w * x}), 0));
}

TEST_CASE("normal form is idempotent, linear, and decides membership", "[exactalg][property]") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 40; ++trial) {
    auto R = ring_of({"a", "b", "c"});
    std::vector<Polynomial> gens;
    const int k = 1 + trial % 3;
    for (int i = 0; i < k; ++i) gens.push_back(testing::random_homogeneous(R, 2 * (1 + (trial + i) % 3), rng, 0.5));
    auto gb = buchberger(gens);

    auto p = testing::random_homogeneous(R, 6, rng, 0.7);
    auto q = testing::random_homogeneous(R, 6, rng, 0.7);
    auto np = normal_form(p, gb);
    CHECK(normal_form(np, gb) == np);
    CHECK(normal_form(p + Rational(3) * q, gb) == np + Rational(3) * normal_form(q, gb));
    CHECK(ideal_contains(gb, p - np));

    // every multiple of a generator is in the ideal
    for (const auto& g : gens) CHECK(ideal_contains(gb, g * q));
    // normal forms involve standard monomials only
    for (const auto& [m, c] : np.terms()) CHECK(gb.is_standard(m));
  }
}

TEST_CASE("reduced basis invariants and order independence", "[exactalg][property]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto R = ring_of({"a", "b", "c"});
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(testing::random_homogeneous(R, 2 * (1 + (trial + i) % 3), rng, 0.5));
    auto grevlex = buchberger(gens, MonomialOrder::GradedRevLex);
    auto grlex = buchberger(gens, MonomialOrder::GradedLex);

    const auto& lms = grevlex.leading_monomials();
    for (std::size_t i = 0; i < lms.size(); ++i)
      for (std::size_t j = 0; j < lms.size(); ++j)
        if (i != j) CHECK_FALSE(lms[i].divides(lms[j]));
    // pairwise S-polynomials reduce to zero: the basis generates the same ideal and contains the inputs
    for (const auto& g : gens) CHECK(ideal_contains(grevlex, g));
    for (const auto& g : grevlex.generators()) CHECK(ideal_contains(grlex, g));

    CHECK(is_finite_quotient(grevlex) == is_finite_quotient(grlex));
    for (int d = 0; d <= 12; d += 2) CHECK(hilbert_function(grevlex, d) == hilbert_function(grlex, d));
  }
}

TEST_CASE("Hilbert function of a regular sequence is the complete-intersection series", "[exactalg][property]") {
  std::mt19937 rng(99);
  int regular = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> weights = {2, 2 + 2 * (trial % 2), 2};
    auto R = ring_of({"a", "b", "c"}, weights);
    std::vector<Polynomial> gens;
    std::vector<int> degs;
    for (int i = 0; i < 3; ++i) {
      const int d = 4 + 2 * ((trial + i) % 3);
      degs.push_back(d);
      gens.push_back(testing::random_homogeneous(R, d, rng, 0.8));
    }
    bool homogeneous_ok = true;
    for (auto& g : gens) homogeneous_ok = homogeneous_ok && g.homogeneous_degree().has_value();
    if (!homogeneous_ok || !is_regular_sequence(gens)) continue;
    ++regular;
    auto gb = buchberger(gens);
    auto expected = ci_series(degs, weights, 30);
    for (int d = 0; d <= 30; ++d) CHECK(static_cast<long>(hilbert_function(gb, d)) == expected[static_cast<std::size_t>(d)]);
  }
  CHECK(regular >= 10);
}

TEST_CASE("contains_maximal_power is monotone in k", "[exactalg][property]") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto R = ring_of({"w", "x"});
    auto gb = buchberger({testing::random_homogeneous(R, 4, rng), testing::random_homogeneous(R, 6, rng)});
    bool seen = false;
    for (int k = 1; k <= 8; ++k) {
      const bool now = contains_maximal_power(gb, k);
      if (seen) CHECK(now);
      seen = seen || now;
    }
  }
}

TEST_CASE("exact rank and kernels", "[exactalg][linalg]") {
  QMatrix m(3, 3);
  int v = 1;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = v++;
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  for (auto& x : m.apply(ker[0])) CHECK(x == 0);

  SpanTracker s(3);
  CHECK(s.insert({1, 2, 3}));
  CHECK_FALSE(s.insert({2, 4, 6}));
  CHECK(s.contains({Rational(1, 2), 1, Rational(3, 2)}));
}
