#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ellk/exactalg/polynomial.hpp"

namespace ellk {

/// Reduced, monic Groebner basis of a homogeneous ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), order_(order), gens_(std::move(gens)) {
    leading_.reserve(gens_.size());
    for (const auto& g : gens_) leading_.push_back(g.leading_term(order_).first);
  }

  const RingPtr& ring() const { return ring_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  /// True when the ideal is the whole ring.
  bool is_unit_ideal() const {
    return std::any_of(leading_.begin(), leading_.end(), [](const Monomial& m) { return m.is_one(); });
  }

  bool is_standard(const Monomial& m) const {
    return std::none_of(leading_.begin(), leading_.end(), [&](const Monomial& l) { return l.divides(m); });
  }

  /// Per-variable smallest pure power among leading monomials, -1 if none.
  std::vector<int> pure_power_caps() const {
    std::vector<int> caps(ring_->size(), -1);
    for (const auto& l : leading_) {
      auto v = l.pure_power_variable();
      if (v < 0) continue;
      int& c = caps[static_cast<std::size_t>(v)];
      if (c < 0 || l[static_cast<std::size_t>(v)] < c) c = l[static_cast<std::size_t>(v)];
    }
    return caps;
  }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<Monomial> leading_;
};

namespace detail {

struct Term {
  Monomial mono;
  Rational coeff;
};
/// Terms kept sorted descending in the active order.
using TermList = std::vector<Term>;

inline TermList to_terms(const Polynomial& p, MonomialOrder order) {
  TermList out;
  for (auto& [m, c] : p.sorted_terms(order)) out.push_back({m, c});
  return out;
}

inline Polynomial from_terms(const RingPtr& ring, const TermList& t) {
  Polynomial p(ring);
  for (const auto& term : t) p.add_term(term.mono, term.coeff);
  return p;
}

/// f[from..] - scale * shift * g, merged in order.
inline TermList sub_scaled(const PolyRing& ring, MonomialOrder order, const TermList& f, std::size_t from,
                           const Rational& scale, const Monomial& shift, const TermList& g) {
  TermList out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * shift;
    if (i == f.size()) {
      out.push_back({std::move(gm), -scale * g[j].coeff});
      ++j;
      continue;
    }
    const int cmp = ring.compare(f[i].mono, gm, order);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), -scale * g[j].coeff});
      ++j;
    } else {
      Rational c = f[i].coeff - scale * g[j].coeff;
      if (c != 0) out.push_back({std::move(gm), std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Fully reduces f modulo the (monic) list g.
inline TermList reduce(const PolyRing& ring, MonomialOrder order, TermList f, const std::vector<TermList>& g,
                       std::ptrdiff_t skip = -1) {
  TermList rem;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Term& lt = f[pos];
    std::ptrdiff_t divisor = -1;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (static_cast<std::ptrdiff_t>(k) == skip || g[k].empty()) continue;
      if (g[k].front().mono.divides(lt.mono)) {
        divisor = static_cast<std::ptrdiff_t>(k);
        break;
      }
    }
    if (divisor < 0) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const TermList& gk = g[static_cast<std::size_t>(divisor)];
    const Rational scale = lt.coeff / gk.front().coeff;
    const Monomial shift = lt.mono / gk.front().mono;
    f = sub_scaled(ring, order, f, pos, scale, shift, gk);
    pos = 0;
  }
  return rem;
}

inline void make_monic(TermList& t) {
  if (t.empty()) return;
  const Rational lc = t.front().coeff;
  if (lc == 1) return;
  for (auto& term : t) term.coeff /= lc;
}

inline TermList s_polynomial(const PolyRing& ring, MonomialOrder order, const TermList& a, const TermList& b) {
  const Monomial l = lcm(a.front().mono, b.front().mono);
  // a, b monic: S = (l/lm_a) a - (l/lm_b) b
  TermList sa;
  const Monomial shift_a = l / a.front().mono;
  for (const auto& t : a) sa.push_back({t.mono * shift_a, t.coeff});
  return sub_scaled(ring, order, sa, 0, Rational(1), l / b.front().mono, b);
}

}  // namespace detail

/// Buchberger's algorithm with the product and chain criteria. Zero inputs are
/// dropped; an all-zero input yields the empty basis.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& ideal,
                                MonomialOrder order = MonomialOrder::GradedRevLex) {
  if (ideal.empty()) throw std::invalid_argument("buchberger: empty generator list");
  const RingPtr ring = ideal.front().ring();
  for (const auto& p : ideal)
    if (!same_ring(ring, p.ring())) throw std::invalid_argument("buchberger: generators from different rings");
  const PolyRing& R = *ring;

  std::vector<detail::TermList> g;
  for (const auto& p : ideal) {
    if (p.is_zero()) continue;
    auto t = detail::to_terms(p, order);
    detail::make_monic(t);
    g.push_back(std::move(t));
  }

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto lm = [&](std::size_t i) -> const Monomial& { return g[i].front().mono; };
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    // normal selection strategy: smallest lcm first
    auto best = pending.begin();
    Monomial best_lcm = lcm(lm(best->first), lm(best->second));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm(lm(it->first), lm(it->second));
      if (R.compare(l, best_lcm, order) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    if (lm(i).coprime(lm(j))) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = lm(k).divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;

    auto r = detail::reduce(R, order, detail::s_polynomial(R, order, g[i], g[j]), g);
    if (r.empty()) continue;
    detail::make_monic(r);
    const std::size_t t = g.size();
    g.push_back(std::move(r));
    for (std::size_t s = 0; s < t; ++s) pending.insert({s, t});
  }

  // minimalize: drop generators whose leading monomial is divisible by another's
  std::vector<detail::TermList> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      if (lm(k).divides(lm(i))) redundant = !(lm(k) == lm(i)) || k < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // interreduce tails
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    detail::TermList head{minimal[i].front()};
    detail::TermList tail(minimal[i].begin() + 1, minimal[i].end());
    auto reduced_tail = detail::reduce(R, order, std::move(tail), minimal, static_cast<std::ptrdiff_t>(i));
    head.insert(head.end(), reduced_tail.begin(), reduced_tail.end());
    minimal[i] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
    return R.compare(a.front().mono, b.front().mono, order) < 0;
  });

  std::vector<Polynomial> out;
  for (const auto& t : minimal) out.push_back(detail::from_terms(ring, t));
  return GroebnerBasis(ring, order, std::move(out));
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!same_ring(p.ring(), gb.ring())) throw std::invalid_argument("normal_form: ring mismatch");
  std::vector<detail::TermList> g;
  for (const auto& q : gb.generators()) g.push_back(detail::to_terms(q, gb.order()));
  return detail::from_terms(gb.ring(), detail::reduce(*gb.ring(), gb.order(), detail::to_terms(p, gb.order()), g));
}

inline bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) { return normal_form(p, gb).is_zero(); }

/// Finite-dimensional quotient iff every variable has a pure power among the leading monomials.
inline bool is_finite_quotient(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return true;
  auto caps = gb.pure_power_caps();
  return std::all_of(caps.begin(), caps.end(), [](int c) { return c >= 0; });
}

/// Standard monomials of one weighted degree, descending in the basis order.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || gb.is_unit_ideal()) return out;
  for_each_monomial_of_degree(*gb.ring(), degree, gb.pure_power_caps(), [&](const Monomial& m) {
    if (gb.is_standard(m)) out.push_back(m);
  });
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return gb.ring()->compare(a, b, gb.order()) > 0; });
  return out;
}

/// dim of the quotient's graded piece in weighted degree `degree`.
inline std::size_t hilbert_function(const GroebnerBasis& gb, int degree) {
  if (degree < 0 || gb.is_unit_ideal()) return 0;
  std::size_t count = 0;
  for_each_monomial_of_degree(*gb.ring(), degree, gb.pure_power_caps(), [&](const Monomial& m) {
    if (gb.is_standard(m)) ++count;
  });
  return count;
}

/// Largest weighted degree of a standard monomial; nullopt for infinite quotients.
inline std::optional<int> socle_degree_bound(const GroebnerBasis& gb) {
  if (!is_finite_quotient(gb)) return std::nullopt;
  if (gb.is_unit_ideal()) return 0;
  auto caps = gb.pure_power_caps();
  int bound = 0;
  for (std::size_t i = 0; i < caps.size(); ++i) bound += (caps[i] - 1) * gb.ring()->weight(i);
  return bound;
}

/// Hilbert function values at degrees 0..up_to (odd degrees included as zeros).
inline std::vector<std::size_t> hilbert_values(const GroebnerBasis& gb, int up_to) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= up_to; ++d) out.push_back(hilbert_function(gb, d));
  return out;
}

inline std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb) {
  auto bound = socle_degree_bound(gb);
  if (!bound) return std::nullopt;
  std::size_t total = 0;
  for (int d = 0; d <= *bound; ++d) total += hilbert_function(gb, d);
  return total;
}

/// Square homogeneous system: regular sequence iff the quotient is finite dimensional.
/// A zero entry is never a non-zero-divisor, so it yields false.
inline bool is_regular_sequence(const std::vector<Polynomial>& polys) {
  if (polys.empty()) throw std::invalid_argument("is_regular_sequence: empty sequence");
  const RingPtr& ring = polys.front().ring();
  if (polys.size() != ring->size())
    throw std::invalid_argument("is_regular_sequence: expected " + std::to_string(ring->size()) +
                                " polynomials (one per variable), got " + std::to_string(polys.size()));
  bool has_zero = false;
  for (const auto& p : polys) {
    if (!same_ring(ring, p.ring())) throw std::invalid_argument("is_regular_sequence: ring mismatch");
    if (p.is_zero()) {
      has_zero = true;
      continue;
    }
    auto d = p.homogeneous_degree();
    if (!d) throw std::invalid_argument("is_regular_sequence: non-homogeneous polynomial " + p.to_string());
    if (*d <= 0) throw std::invalid_argument("is_regular_sequence: constant polynomial " + p.to_string());
  }
  if (has_zero) return false;
  return is_finite_quotient(buchberger(polys));
}

/// True iff every monomial of (unweighted) total degree k lies in the ideal.
inline bool contains_maximal_power(const GroebnerBasis& gb, int k) {
  if (k < 1) throw std::invalid_argument("contains_maximal_power: k must be positive");
  const std::size_t n = gb.ring()->size();
  if (n == 0) return true;
  Monomial m(n);
  bool ok = true;
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (!ok) return;
    if (i + 1 == n) {
      m[i] = remaining;
      ok = ideal_contains(gb, Polynomial::monomial(gb.ring(), m));
      m[i] = 0;
      return;
    }
    for (int e = remaining; e >= 0 && ok; --e) {
      m[i] = e;
      self(self, i + 1, remaining - e);
    }
    m[i] = 0;
  };
  rec(rec, 0, k);
  return ok;
}

}  // namespace ellk
