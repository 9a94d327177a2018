#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellk/exactalg/groebner.hpp"
#include "ellk/exactalg/linalg.hpp"
#include "ellk/sullivan/cohomology.hpp"
#include "ellk/sullivan/pure.hpp"

namespace ellk {

namespace detail {

/// Algebra under construction together with the map φ: ∧V -> H on generators.
class ModelBuilder {
 public:
  ModelBuilder(const RingPresentation& pres, GroebnerBasis gb) : pres_(pres), gb_(std::move(gb)) {
    for (const auto& v : pres.ring->variables()) taken_.insert(v.name);
  }

  void add_closed(const std::string& name, int degree, const Polynomial& image) {
    gens_.push_back({name, degree, std::nullopt});
    d_.push_back({});
    phi_.push_back(normal_form(image, gb_));
    taken_.insert(name);
  }

  /// `dv` is given as coordinates in the current degree basis of degree+1.
  void add_killer(int degree, const std::vector<Monomial>& basis, const QVector& dv) {
    std::string name;
    int i = 1;
    do name = "y" + std::to_string(degree) + "_" + std::to_string(i++);
    while (taken_.count(name));
    taken_.insert(name);
    gens_.push_back({name, degree, std::nullopt});
    d_.push_back({basis, dv});
    phi_.push_back(Polynomial(pres_.ring));
  }

  /// Snapshot of the current algebra (differentials re-embedded in the enlarged generator set).
  SullivanAlgebra algebra(int truncation) const {
    auto gens = make_generators(gens_);
    std::vector<Element> d;
    for (const auto& s : d_) {
      Element e(gens);
      for (std::size_t k = 0; k < s.basis.size(); ++k) {
        if (s.coords[k] == 0) continue;
        Monomial big(gens->size());
        for (std::size_t i = 0; i < s.basis[k].size(); ++i) big[i] = s.basis[k][i];
        e.add_term(big, s.coords[k]);
      }
      d.push_back(std::move(e));
    }
    return SullivanAlgebra(gens, std::move(d), truncation);
  }

  /// φ(m) reduced modulo the relations.
  Polynomial phi(const Monomial& m) const {
    Polynomial p = Polynomial::constant(pres_.ring, Rational(1));
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) p *= phi_[i].pow(m[i]);
    return normal_form(p, gb_);
  }

 private:
  struct Stored {
    std::vector<Monomial> basis;
    QVector coords;
  };

  const RingPresentation& pres_;
  GroebnerBasis gb_;
  std::vector<SullivanGenerator> gens_;
  std::vector<Stored> d_;
  std::vector<Polynomial> phi_;
  std::set<std::string> taken_;
};

inline QVector standard_coordinates(const Polynomial& nf, const std::vector<Monomial>& standard) {
  QVector v(standard.size());
  for (const auto& [m, c] : nf.terms()) {
    auto it = std::find(standard.begin(), standard.end(), m);
    if (it == standard.end()) throw std::logic_error("normal form outside the standard monomials");
    v[static_cast<std::size_t>(it - standard.begin())] = c;
  }
  return v;
}

}  // namespace detail

/// Minimal Sullivan model of a formal space with cohomology Q[x]/(relations),
/// built degree by degree through `up_to`: closed generators make H(∧V) -> H onto,
/// generators y{k}_i of degree k kill the kernel in degree k+1.
inline SullivanAlgebra minimal_model_from_ring(const RingPresentation& pres, int up_to) {
  pres.check();
  GroebnerBasis gb = pres.basis();
  if (gb.is_unit_ideal() || !is_finite_quotient(gb))
    throw std::invalid_argument("minimal_model_from_ring: quotient is not finite dimensional");
  const int truncation = std::max(kDefaultTruncationBound, up_to + 2);
  detail::ModelBuilder builder(pres, gb);
  const auto& ring = *pres.ring;

  for (int k = 2; k <= up_to; ++k) {
    // closed generators in degree k
    if (k % 2 == 0) {
      const auto alg = builder.algebra(truncation);
      const auto& gens = *alg.generators();
      const auto standard = standard_monomials(gb, k);
      SpanTracker image(standard.size());
      const auto bk = degree_basis(gens, k), bk1 = degree_basis(gens, k + 1);
      const auto cocycles = kernel_basis(differential_matrix(alg, bk, bk1));
      for (const auto& z : cocycles) {
        Polynomial p(pres.ring);
        for (std::size_t i = 0; i < bk.size(); ++i)
          if (z[i] != 0) p += builder.phi(bk[i]) * z[i];
        image.insert(detail::standard_coordinates(normal_form(p, gb), standard));
      }
      for (std::size_t v = 0; v < ring.size(); ++v) {
        if (ring.weight(v) != k) continue;
        const Polynomial x = Polynomial::variable(pres.ring, v);
        if (image.insert(detail::standard_coordinates(normal_form(x, gb), standard)))
          builder.add_closed(ring.name(v), k, x);
      }
      int extra = 1;
      for (const auto& s : standard) {
        const Polynomial x = Polynomial::monomial(pres.ring, s);
        QVector coords(standard.size());
        coords[static_cast<std::size_t>(&s - standard.data())] = 1;
        if (image.insert(coords)) builder.add_closed("c" + std::to_string(k) + "_" + std::to_string(extra++), k, x);
      }
    }
    // generators of degree k killing the kernel of H^{k+1}(∧V) -> H^{k+1}
    {
      const auto alg = builder.algebra(truncation);
      const auto& gens = *alg.generators();
      const auto bk = degree_basis(gens, k), bk1 = degree_basis(gens, k + 1), bk2 = degree_basis(gens, k + 2);
      const QMatrix d1 = differential_matrix(alg, bk1, bk2);
      const auto standard = standard_monomials(gb, k + 1);
      QMatrix phi(standard.size(), bk1.size());
      for (std::size_t c = 0; c < bk1.size(); ++c) {
        const QVector col = detail::standard_coordinates(builder.phi(bk1[c]), standard);
        for (std::size_t r = 0; r < standard.size(); ++r) phi(r, c) = col[r];
      }
      SpanTracker boundaries = column_span(differential_matrix(alg, bk, bk1));
      std::vector<QVector> killers;
      for (auto& z : kernel_basis(QMatrix::stack(d1, phi)))
        if (boundaries.insert(z)) killers.push_back(std::move(z));
      for (const auto& z : killers) builder.add_killer(k, bk1, z);
    }
  }
  return builder.algebra(truncation);
}

}  // namespace ellk
