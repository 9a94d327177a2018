#pragma once

#include <random>
#include <vector>

#include "ellk/exactalg/polynomial.hpp"

namespace ellk::testing {

/// Random homogeneous polynomial of weighted degree `degree` with small integer
/// coefficients; `density` is the chance each monomial gets a nonzero coefficient.
inline Polynomial random_homogeneous(const RingPtr& ring, int degree, std::mt19937& rng, double density = 0.6,
                                     int coeff_range = 3) {
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::bernoulli_distribution keep(density);
  Polynomial p(ring);
  for_each_monomial_of_degree(*ring, degree, [&](const Monomial& m) {
    if (keep(rng)) p.add_term(m, Rational(coeff(rng)));
  });
  if (p.is_zero()) {
    std::vector<Monomial> all;
    for_each_monomial_of_degree(*ring, degree, [&](const Monomial& m) { all.push_back(m); });
    if (!all.empty()) p.add_term(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)], Rational(1));
  }
  return p;
}

}  // namespace ellk::testing
