#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellk/exactalg/monomial.hpp"

namespace ellk {

/// Term orders available to the Groebner engine. Both are graded by the
/// weighted degree, so every ideal-theoretic fact we compute is order independent.
enum class MonomialOrder { GradedRevLex, GradedLex };

/// Polynomial ring Q[x_1..x_k] whose variables carry positive even weights
/// (the topological degrees 2a_i of even Sullivan generators).
class PolyRing {
 public:
  struct Variable {
    std::string name;
    int weight = 2;
    friend bool operator==(const Variable&, const Variable&) = default;
  };

  explicit PolyRing(std::vector<Variable> vars, MonomialOrder order = MonomialOrder::GradedRevLex)
      : vars_(std::move(vars)), order_(order) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
      if (v.name.empty()) throw std::invalid_argument("empty variable name");
      if (!seen.insert(v.name).second)
        throw std::invalid_argument("duplicate variable name '" + v.name + "'");
      if (v.weight <= 0 || v.weight % 2 != 0)
        throw std::invalid_argument("variable '" + v.name + "' must have a positive even weight, got " +
                                    std::to_string(v.weight));
    }
  }

  static std::shared_ptr<const PolyRing> make(std::vector<Variable> vars,
                                              MonomialOrder order = MonomialOrder::GradedRevLex) {
    return std::make_shared<const PolyRing>(std::move(vars), order);
  }

  std::size_t size() const { return vars_.size(); }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::string& name(std::size_t i) const { return vars_[i].name; }
  int weight(std::size_t i) const { return vars_[i].weight; }
  MonomialOrder order() const { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }

  int degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) d += m[i] * vars_[i].weight;
    return d;
  }

  /// Three-way comparison of monomials under `order`; positive means a > b.
  int compare(const Monomial& a, const Monomial& b, MonomialOrder order) const {
    const int da = degree(a), db = degree(b);
    if (da != db) return da < db ? -1 : 1;
    const std::size_t n = vars_.size();
    if (order == MonomialOrder::GradedLex) {
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    }
    // reverse lex tie-break: smaller exponent in the last differing variable wins
    for (std::size_t i = n; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  int compare(const Monomial& a, const Monomial& b) const { return compare(a, b, order_); }

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

/// Calls `fn(const Monomial&)` for every monomial of weighted degree `degree`,
/// optionally with per-variable exclusive exponent caps (`caps[i] < 0` = none).
template <typename Fn>
void for_each_monomial_of_degree(const PolyRing& ring, int degree, const std::vector<int>& caps, Fn&& fn) {
  const std::size_t n = ring.size();
  if (degree < 0) return;
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == n) {
      const int w = ring.weight(i);
      if (remaining % w != 0) return;
      const int e = remaining / w;
      if (!caps.empty() && caps[i] >= 0 && e >= caps[i]) return;
      m[i] = e;
      fn(static_cast<const Monomial&>(m));
      m[i] = 0;
      return;
    }
    const int w = ring.weight(i);
    int max_e = remaining / w;
    if (!caps.empty() && caps[i] >= 0) max_e = std::min(max_e, caps[i] - 1);
    for (int e = max_e; e >= 0; --e) {
      m[i] = e;
      self(self, i + 1, remaining - e * w);
    }
    m[i] = 0;
  };
  if (n == 0) {
    if (degree == 0) fn(static_cast<const Monomial&>(m));
    return;
  }
  rec(rec, 0, degree);
}

template <typename Fn>
void for_each_monomial_of_degree(const PolyRing& ring, int degree, Fn&& fn) {
  for_each_monomial_of_degree(ring, degree, {}, std::forward<Fn>(fn));
}

}  // namespace ellk
