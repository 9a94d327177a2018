#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ellk/exactalg/groebner.hpp"
#include "ellk/exactalg/polynomial.hpp"
#include "ellk/sullivan/algebra.hpp"

namespace ellk {

/// Graded ring Q[x_1..x_k]/(relations), optionally with a distinguished degree-2 class.
struct RingPresentation {
  RingPtr ring;
  std::vector<Polynomial> relations;
  std::optional<std::string> distinguished_class;

  GroebnerBasis basis() const {
    if (relations.empty()) return GroebnerBasis(ring, ring->order(), {});
    return buchberger(relations);
  }

  void check() const {
    if (!ring) throw std::invalid_argument("presentation without ring");
    for (const auto& r : relations) {
      if (!same_ring(ring, r.ring())) throw std::invalid_argument("relation in a foreign ring");
      if (!r.is_homogeneous()) throw std::invalid_argument("relation " + r.to_string() + " is not homogeneous");
    }
    if (distinguished_class) {
      auto i = ring->index_of(*distinguished_class);
      if (!i) throw std::invalid_argument("distinguished class '" + *distinguished_class + "' is not a variable");
      if (ring->weight(*i) != 2)
        throw std::invalid_argument("distinguished class '" + *distinguished_class + "' must have degree 2");
    }
  }
};

struct PurePresentation {
  RingPresentation presentation;
  bool elliptic = false;
};

/// Drops d on even generators and every term of d(odd) that contains an odd generator.
inline SullivanAlgebra associated_pure(const SullivanAlgebra& alg) {
  const auto& gens = alg.generators();
  std::vector<Element> d;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    Element e(gens);
    if (alg.generator(i).is_odd())
      for (const auto& [m, c] : alg.differential(i).terms())
        if (gens->only_even(m)) e.add_term(m, c);
    d.push_back(std::move(e));
  }
  return SullivanAlgebra(gens, std::move(d), alg.truncation_bound());
}

namespace detail {

/// Polynomial ring on the even generators and the map ∧V^even -> ring.
struct EvenRing {
  RingPtr ring;
  std::vector<std::ptrdiff_t> slot;  // generator index -> ring variable, -1 for odd
};

inline EvenRing even_ring(const GeneratorSet& gens) {
  EvenRing er;
  std::vector<PolyRing::Variable> vars;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_even()) {
      er.slot.push_back(static_cast<std::ptrdiff_t>(vars.size()));
      vars.push_back({gens[i].name, gens[i].degree});
    } else {
      er.slot.push_back(-1);
    }
  }
  er.ring = PolyRing::make(std::move(vars));
  return er;
}

inline Polynomial to_polynomial(const Element& e, const EvenRing& er) {
  Polynomial p(er.ring);
  for (const auto& [m, c] : e.terms()) {
    Monomial pm(er.ring->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (er.slot[i] < 0) throw std::invalid_argument("element involves an odd generator");
      pm[static_cast<std::size_t>(er.slot[i])] = m[i];
    }
    p.add_term(pm, c);
  }
  return p;
}

}  // namespace detail

/// H(∧V,d) ≅ Q[V^even]/(d y_1, …, d y_k) for a pure algebra; `elliptic` records
/// whether the odd differentials form a regular sequence.
inline PurePresentation pure_elliptic_presentation(const SullivanAlgebra& alg) {
  if (!alg.is_pure()) throw std::invalid_argument("pure_elliptic_presentation: algebra is not pure");
  std::size_t evens = 0, odds = 0;
  for (const auto& g : alg.generators()->list()) (g.is_even() ? evens : odds)++;
  if (evens != odds)
    throw std::invalid_argument("pure_elliptic_presentation: " + std::to_string(evens) + " even vs " +
                                std::to_string(odds) + " odd generators");
  if (evens == 0) throw std::invalid_argument("pure_elliptic_presentation: no generators");
  const auto er = detail::even_ring(*alg.generators());
  PurePresentation out;
  out.presentation.ring = er.ring;
  for (std::size_t i = 0; i < alg.size(); ++i)
    if (alg.generator(i).is_odd()) out.presentation.relations.push_back(detail::to_polynomial(alg.differential(i), er));
  out.elliptic = is_regular_sequence(out.presentation.relations);
  return out;
}

/// Pure algebra (∧(x_1..x_k, y_1..y_s), d y_j = relation_j) with deg y_j = deg relation_j - 1.
/// Odd generator names default to y1, y2, … (skipping names already taken).
inline SullivanAlgebra pure_model(const RingPresentation& pres, std::vector<std::string> odd_names = {}) {
  pres.check();
  const auto& ring = *pres.ring;
  std::vector<SullivanGenerator> gl;
  for (const auto& v : ring.variables()) gl.push_back({v.name, v.weight, std::nullopt});
  if (!odd_names.empty() && odd_names.size() != pres.relations.size())
    throw std::invalid_argument("pure_model: one odd name per relation required");
  int counter = 1;
  for (std::size_t j = 0; j < pres.relations.size(); ++j) {
    const auto& r = pres.relations[j];
    auto deg = r.homogeneous_degree();
    if (!deg) throw std::invalid_argument("pure_model: zero relation");
    std::string name;
    if (!odd_names.empty()) {
      name = odd_names[j];
    } else {
      do name = "y" + std::to_string(counter++);
      while (ring.index_of(name));
    }
    gl.push_back({name, *deg - 1, std::nullopt});
  }
  auto gens = make_generators(std::move(gl));
  std::vector<Element> d(gens->size(), Element(gens));
  for (std::size_t j = 0; j < pres.relations.size(); ++j) {
    Element e(gens);
    for (const auto& [m, c] : pres.relations[j].terms()) {
      Monomial big(gens->size());
      for (std::size_t i = 0; i < m.size(); ++i) big[i] = m[i];
      e.add_term(big, c);
    }
    d[ring.size() + j] = std::move(e);
  }
  return SullivanAlgebra(gens, std::move(d));
}

}  // namespace ellk
