#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellk/exactalg/linalg.hpp"
#include "ellk/sullivan/cohomology.hpp"

namespace ellk {

/// Split V = C ⊕ N of the generators into closed and non-closed parts.
struct FormalityWitness {
  std::vector<std::string> closed;
  std::vector<std::string> non_closed;
};

namespace detail {

inline std::vector<bool> witness_mask(const SullivanAlgebra& alg, const FormalityWitness& w) {
  const auto& gens = *alg.generators();
  std::vector<int> seen(gens.size(), 0);
  std::vector<bool> in_n(gens.size(), false);
  auto mark = [&](const std::string& name, bool n) {
    auto i = gens.index_of(name);
    if (!i) throw std::invalid_argument("formality witness names unknown generator '" + name + "'");
    ++seen[*i];
    in_n[*i] = n;
  };
  for (const auto& c : w.closed) mark(c, false);
  for (const auto& n : w.non_closed) mark(n, true);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (seen[i] != 1) throw std::invalid_argument("generator '" + gens[i].name + "' must appear exactly once in the split");
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!in_n[i] && !alg.differential(i).is_zero())
      throw std::invalid_argument("generator '" + gens[i].name + "' is in C but not closed");
  // d restricted to N must be injective; N is graded so check degree by degree
  std::set<int> degrees;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (in_n[i]) degrees.insert(gens[i].degree);
  for (int deg : degrees) {
    const auto target = degree_basis(gens, deg + 1);
    const auto index = index_basis(target);
    SpanTracker span(target.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (in_n[i] && gens[i].degree == deg && !span.insert(coordinates(alg.differential(i), index)))
        throw std::invalid_argument("d is not injective on N in degree " + std::to_string(deg));
  }
  return in_n;
}

}  // namespace detail

/// True iff, in every degree up to `up_to`, each closed element of the ideal
/// generated by N is exact.
inline bool check_formality_witness(const SullivanAlgebra& alg, const FormalityWitness& w, int up_to) {
  const auto in_n = detail::witness_mask(alg, w);
  const auto& gens = *alg.generators();
  for (int k = 1; k <= up_to; ++k) {
    const auto prev = degree_basis(gens, k - 1), cur = degree_basis(gens, k), next = degree_basis(gens, k + 1);
    // the ideal (N) in degree k is spanned by the monomials containing an N generator
    std::vector<Monomial> ideal;
    std::vector<std::size_t> position;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (in_n[g] && cur[i][g] > 0) {
          ideal.push_back(cur[i]);
          position.push_back(i);
          break;
        }
    }
    if (ideal.empty()) continue;
    SpanTracker exact = column_span(differential_matrix(alg, prev, cur));
    for (const auto& z : kernel_basis(differential_matrix(alg, ideal, next))) {
      QVector full(cur.size());
      for (std::size_t j = 0; j < ideal.size(); ++j) full[position[j]] = z[j];
      if (!exact.contains(full)) return false;
    }
  }
  return true;
}

}  // namespace ellk
