#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellk/exactalg/linalg.hpp"
#include "ellk/sullivan/algebra.hpp"
#include "ellk/sullivan/betti.hpp"

namespace ellk {

/// A computation would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kBasisCap = 200000;

/// Monomial basis of (∧V)^degree: exponent vectors with odd exponents in {0,1},
/// in ascending structural order.
inline std::vector<Monomial> degree_basis(const GeneratorSet& gens, int degree, std::size_t cap = kBasisCap) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur(gens.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == gens.size()) {
      if (remaining == 0) {
        if (out.size() >= cap)
          throw ResourceError("basis in degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap));
        out.push_back(cur);
      }
      return;
    }
    const int dg = gens[i].degree;
    const int max_e = gens[i].is_odd() ? std::min(1, remaining / dg) : remaining / dg;
    for (int e = 0; e <= max_e; ++e) {
      cur[i] = e;
      rec(i + 1, remaining - e * dg);
    }
    cur[i] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::map<Monomial, std::size_t> index_basis(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

/// Coordinates of a homogeneous element in a degree basis.
inline QVector coordinates(const Element& e, const std::map<Monomial, std::size_t>& index) {
  QVector v(index.size());
  for (const auto& [m, c] : e.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw std::logic_error("element has a term outside the target basis");
    v[it->second] = c;
  }
  return v;
}

inline Element from_coordinates(const GeneratorsPtr& gens, const std::vector<Monomial>& basis, const QVector& v) {
  Element e(gens);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (v[i] != 0) e.add_term(basis[i], v[i]);
  return e;
}

/// Matrix of d: (∧V)^k -> (∧V)^{k+1}, columns indexed by `source`.
inline QMatrix differential_matrix(const SullivanAlgebra& alg, const std::vector<Monomial>& source,
                                   const std::vector<Monomial>& target) {
  const auto index = index_basis(target);
  QMatrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const QVector col = coordinates(alg.apply(source[c]), index);
    for (std::size_t r = 0; r < target.size(); ++r) m(r, c) = col[r];
  }
  return m;
}

/// Column space of a matrix as a SpanTracker.
inline SpanTracker column_span(const QMatrix& m) {
  SpanTracker s(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) s.insert(m.column(c));
  return s;
}

/// b_k = dim ker d_k - rank d_{k-1} for k = 0..up_to.
inline BettiVector cohomology(const SullivanAlgebra& alg, int up_to, std::size_t cap = kBasisCap) {
  if (up_to < 0) throw std::invalid_argument("cohomology: negative degree bound");
  if (up_to > alg.truncation_bound())
    throw std::invalid_argument("cohomology: bound " + std::to_string(up_to) + " exceeds truncation bound " +
                                std::to_string(alg.truncation_bound()));
  const auto& gens = *alg.generators();
  std::vector<std::vector<Monomial>> bases;
  for (int k = 0; k <= up_to + 1; ++k) bases.push_back(degree_basis(gens, k, cap));
  std::vector<std::size_t> ranks(static_cast<std::size_t>(up_to) + 1);
  for (int k = 0; k <= up_to; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    ranks[ku] = rank(differential_matrix(alg, bases[ku], bases[ku + 1]));
  }
  BettiVector b;
  for (int k = 0; k <= up_to; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const std::size_t incoming = k > 0 ? ranks[ku - 1] : 0;
    b.values.push_back(static_cast<std::int64_t>(bases[ku].size() - ranks[ku] - incoming));
  }
  return b;
}

}  // namespace ellk
