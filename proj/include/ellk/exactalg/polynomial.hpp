#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ellk/exactalg/monomial.hpp"
#include "ellk/exactalg/poly_ring.hpp"
#include "ellk/exactalg/rational.hpp"
#include "ellk/exactalg/term_format.hpp"

namespace ellk {

/// Exact-rational multivariate polynomial over a weighted PolyRing.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("polynomial without ring");
  }
  Polynomial(RingPtr ring, TermMap terms) : Polynomial(std::move(ring)) {
    for (auto& [m, c] : terms) add_term(m, c);
  }

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    p.add_term(Monomial(p.ring_->size()), c);
    return p;
  }
  static Polynomial variable(RingPtr ring, std::size_t i, int power = 1) {
    Polynomial p(ring);
    p.add_term(Monomial::variable(p.ring_->size(), i, power), Rational(1));
    return p;
  }
  static Polynomial variable(RingPtr ring, const std::string& name, int power = 1) {
    auto idx = ring->index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
    return variable(std::move(ring), *idx, power);
  }
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c = Rational(1)) {
    Polynomial p(ring);
    p.add_term(m, c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.size() != ring_->size()) throw std::invalid_argument("monomial arity does not match ring");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// All terms share one weighted degree (the zero polynomial counts as homogeneous).
  bool is_homogeneous() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      const int dm = ring_->degree(m);
      if (d && *d != dm) return false;
      d = dm;
    }
    return true;
  }

  /// Weighted degree of a nonzero homogeneous polynomial.
  std::optional<int> homogeneous_degree() const {
    if (is_zero() || !is_homogeneous()) return std::nullopt;
    return ring_->degree(terms_.begin()->first);
  }

  int max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, ring_->degree(m));
    return d;
  }

  /// Leading (monomial, coefficient) under `order`; requires nonzero.
  std::pair<Monomial, Rational> leading_term(MonomialOrder order) const {
    if (is_zero()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ring_->compare(it->first, best->first, order) > 0) best = it;
    return *best;
  }
  std::pair<Monomial, Rational> leading_term() const { return leading_term(ring_->order()); }

  /// Terms sorted descending in the ring's order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms(MonomialOrder order) const {
    std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [&](const auto& a, const auto& b) { return ring_->compare(a.first, b.first, order) > 0; });
    return v;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative exponent");
    Polynomial r = constant(ring_, Rational(1));
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  /// Canonical text form, e.g. `3/2*w^2*x - x^3`; terms descending in the ring's order.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted_terms(ring_->order())) {
      std::string factors;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += ring_->name(i);
        if (m[i] > 1) factors += "^" + std::to_string(m[i]);
      }
      detail::append_term(os, first, c, factors);
      first = false;
    }
    return os.str();
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomials belong to different rings");
  }

  RingPtr ring_;
  TermMap terms_;
};

}  // namespace ellk
