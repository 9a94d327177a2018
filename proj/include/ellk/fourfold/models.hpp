#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ellk/exactalg/groebner.hpp"
#include "ellk/sullivan/cohomology.hpp"
#include "ellk/sullivan/pure.hpp"

namespace ellk {

/// Outcome of checking one parameter sample of an explicit pure model.
struct ModelCheck {
  std::string model;  // "c", "d" or "i"
  std::vector<Rational> params;
  SullivanAlgebra algebra;
  bool elliptic = false;
  BettiVector betti;
  std::vector<int> degrees;
  std::int64_t total = 0;
  std::optional<bool> maximal_power;  // (w,x)^5 in the ideal, model c
  std::optional<bool> hr_valid;       // 0 < α² - β - 1, model d
  std::optional<bool> free_variables;  // no pure power of w or x among leading terms, model i
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

namespace detail {

inline SullivanAlgebra two_variable_model(int odd_degree_y, int odd_degree_z,
                                          const std::function<std::pair<Element, Element>(const Element&, const Element&)>& rel) {
  auto gens = make_generators({{"w", 2, Bidegree{1, 1}}, {"x", 2, Bidegree{1, 1}}, {"y", odd_degree_y}, {"z", odd_degree_z}});
  auto [dy, dz] = rel(Element::generator(gens, "w"), Element::generator(gens, "x"));
  return SullivanAlgebra(gens, {{"y", dy}, {"z", dz}});
}

inline void fill_common(ModelCheck& r, const BettiVector& expected_betti, const std::vector<int>& expected_degrees) {
  auto rep = validate(r.algebra);
  if (!rep.ok()) r.failures.push_back("invalid model: " + rep.to_string());
  const auto pres = pure_elliptic_presentation(r.algebra);
  r.elliptic = pres.elliptic;
  r.betti = cohomology(r.algebra, 8);
  r.degrees = generator_degrees(r.algebra);
  r.total = r.betti.total();
  if (!r.elliptic) r.failures.push_back("differentials do not form a regular sequence");
  if (r.betti != expected_betti) r.failures.push_back("Betti numbers " + r.betti.to_string());
  if (r.degrees != expected_degrees) r.failures.push_back("unexpected generator degrees");
}

}  // namespace detail

inline std::string format_params(const std::vector<Rational>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s;
}

/// ∧(w,x,y,z), dy = x² + w² - βwx, dz = w³x.
inline ModelCheck check_model_c(const Rational& beta) {
  ModelCheck r{"c", {beta}, detail::two_variable_model(3, 7, [&](const Element& w, const Element& x) {
                 return std::pair(x * x + w * w - beta * (w * x), w.pow(3) * x);
               })};
  detail::fill_common(r, BettiVector::from_even({1, 2, 2, 2, 1}), {2, 2, 3, 7});
  const auto gb = pure_elliptic_presentation(r.algebra).presentation.basis();
  r.maximal_power = contains_maximal_power(gb, 5);
  if (!*r.maximal_power) r.failures.push_back("(w,x)^5 not contained in the ideal");
  return r;
}

/// ∧(w,x,y,z), dy = x³ - αw³ - βw²x, dz = wx² + w³ + αw²x; requires β != α² - 1.
inline ModelCheck check_model_d(const Rational& alpha, const Rational& beta) {
  if (beta == alpha * alpha - 1)
    throw std::invalid_argument("check_model_d: beta = alpha^2 - 1 is excluded (" + to_string(alpha) + "," +
                                to_string(beta) + ")");
  ModelCheck r{"d", {alpha, beta}, detail::two_variable_model(5, 5, [&](const Element& w, const Element& x) {
                 return std::pair(x.pow(3) - alpha * w.pow(3) - beta * (w * w * x), w * x * x + w.pow(3) + alpha * (w * w * x));
               })};
  detail::fill_common(r, BettiVector::from_even({1, 2, 3, 2, 1}), {2, 2, 5, 5});
  r.hr_valid = beta < alpha * alpha - 1;
  return r;
}

/// Pure model of the b2 = 4 shape (i): relations y², z², xy - kwy, xz - lwz in degree-2 variables.
inline SullivanAlgebra shape_i_model(const Rational& k, const Rational& l) {
  auto gens = make_generators({{"w", 2, Bidegree{1, 1}},
                               {"x", 2, Bidegree{1, 1}},
                               {"y", 2, Bidegree{2, 0}},
                               {"z", 2, Bidegree{0, 2}},
                               {"u1", 3},
                               {"u2", 3},
                               {"u3", 3},
                               {"u4", 3}});
  auto g = [&](const char* n) { return Element::generator(gens, n); };
  auto w = g("w"), x = g("x"), y = g("y"), z = g("z");
  return SullivanAlgebra(gens, {{"u1", y * y}, {"u2", z * z}, {"u3", x * y - k * (w * y)}, {"u4", x * z - l * (w * z)}});
}

/// The relations are never a regular sequence: the line y = z = 0 lies in their zero set,
/// so no power of w or x leads a Gröbner basis element.
inline ModelCheck check_shape_i(const Rational& k, const Rational& l) {
  ModelCheck r{"i", {k, l}, shape_i_model(k, l)};
  auto rep = validate(r.algebra);
  if (!rep.ok()) r.failures.push_back("invalid model: " + rep.to_string());
  const auto pres = pure_elliptic_presentation(r.algebra);
  r.elliptic = pres.elliptic;
  r.degrees = generator_degrees(r.algebra);
  const auto caps = pres.presentation.basis().pure_power_caps();
  r.free_variables = caps[0] < 0 && caps[1] < 0;
  if (r.elliptic) r.failures.push_back("relations form a regular sequence");
  if (!*r.free_variables) r.failures.push_back("a pure power of w or x leads the basis");
  return r;
}

inline std::vector<Rational> default_samples_c() {
  return {Rational(0), Rational(1), Rational(-5, 2), Rational(-1), Rational(7, 3)};
}

inline std::vector<std::pair<Rational, Rational>> default_samples_d() {
  return {{Rational(2), Rational(0)},
          {Rational(0), Rational(0)},
          {Rational(0), Rational(-2)},
          {Rational(1), Rational(1)},
          {Rational(-1, 2), Rational(3, 2)}};
}

inline std::vector<std::pair<Rational, Rational>> default_samples_i() {
  return {{Rational(1), Rational(1)},
          {Rational(0), Rational(0)},
          {Rational(3, 2), Rational(-2)},
          {Rational(-1), Rational(1, 3)},
          {Rational(2), Rational(5)}};
}

}  // namespace ellk
