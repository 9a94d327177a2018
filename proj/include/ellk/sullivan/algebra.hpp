#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ellk/exactalg/monomial.hpp"
#include "ellk/exactalg/rational.hpp"
#include "ellk/exactalg/term_format.hpp"

namespace ellk {

struct Bidegree {
  int p = 0, q = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Generator of a Sullivan algebra; parity follows the degree.
struct SullivanGenerator {
  std::string name;
  int degree = 2;
  std::optional<Bidegree> bidegree;

  bool is_odd() const { return degree % 2 != 0; }
  bool is_even() const { return !is_odd(); }
  friend bool operator==(const SullivanGenerator&, const SullivanGenerator&) = default;
};

/// Ordered, immutable list of generators shared by algebra elements.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<SullivanGenerator> gens) : gens_(std::move(gens)) {
    std::set<std::string> seen;
    for (const auto& g : gens_) {
      if (g.name.empty()) throw std::invalid_argument("generator with empty name");
      if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator '" + g.name + "'");
    }
  }

  std::size_t size() const { return gens_.size(); }
  const SullivanGenerator& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<SullivanGenerator>& list() const { return gens_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].name == name) return i;
    return std::nullopt;
  }

  int degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) d += m[i] * gens_[i].degree;
    return d;
  }

  /// Sum of generator bidegrees, when every generator involved carries one.
  std::optional<Bidegree> bidegree(const Monomial& m) const {
    Bidegree b;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (m[i] == 0) continue;
      if (!gens_[i].bidegree) return std::nullopt;
      b.p += m[i] * gens_[i].bidegree->p;
      b.q += m[i] * gens_[i].bidegree->q;
    }
    return b;
  }

  bool only_even(const Monomial& m) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (m[i] != 0 && gens_[i].is_odd()) return false;
    return true;
  }

  std::string format_monomial(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += gens_[i].name;
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) { return a.gens_ == b.gens_; }

 private:
  std::vector<SullivanGenerator> gens_;
};

using GeneratorsPtr = std::shared_ptr<const GeneratorSet>;

inline GeneratorsPtr make_generators(std::vector<SullivanGenerator> gens) {
  return std::make_shared<const GeneratorSet>(std::move(gens));
}

inline bool same_generators(const GeneratorsPtr& a, const GeneratorsPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Product of canonical monomials in the free graded-commutative algebra:
/// the result monomial and the Koszul sign, or nullopt when an odd generator repeats.
inline std::optional<std::pair<Monomial, int>> multiply_monomials(const GeneratorSet& gens, const Monomial& a,
                                                                  const Monomial& b) {
  int swaps = 0;
  int odd_in_a_above = 0;  // odd generators of a with index > j, scanned from the top
  for (std::size_t j = gens.size(); j-- > 0;) {
    if (gens[j].is_odd()) {
      if (a[j] && b[j]) return std::nullopt;
      if (b[j]) swaps += odd_in_a_above;
      if (a[j]) ++odd_in_a_above;
    }
  }
  return std::make_pair(a * b, swaps % 2 == 0 ? 1 : -1);
}

/// Element of the free graded-commutative algebra on a GeneratorSet.
class Element {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Element(GeneratorsPtr gens) : gens_(std::move(gens)) {
    if (!gens_) throw std::invalid_argument("element without generators");
  }

  static Element constant(GeneratorsPtr gens, const Rational& c) {
    Element e(gens);
    e.add_term(Monomial(e.gens_->size()), c);
    return e;
  }
  static Element generator(GeneratorsPtr gens, std::size_t i) {
    Element e(gens);
    e.add_term(Monomial::variable(e.gens_->size(), i), Rational(1));
    return e;
  }
  static Element generator(GeneratorsPtr gens, const std::string& name) {
    auto i = gens->index_of(name);
    if (!i) throw std::invalid_argument("unknown generator '" + name + "'");
    return generator(std::move(gens), *i);
  }
  static Element monomial(GeneratorsPtr gens, const Monomial& m, const Rational& c = Rational(1)) {
    Element e(gens);
    e.add_term(m, c);
    return e;
  }

  const GeneratorsPtr& generators() const { return gens_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.size() != gens_->size()) throw std::invalid_argument("monomial arity does not match generators");
    for (std::size_t i = 0; i < m.size(); ++i)
      if ((*gens_)[i].is_odd() && m[i] > 1) return;  // odd generators square to zero
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_homogeneous() const { return degree().has_value() || is_zero(); }

  /// Degree of a nonzero homogeneous element.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      const int dm = gens_->degree(m);
      if (d && *d != dm) return std::nullopt;
      d = dm;
    }
    return d;
  }

  /// Smallest word length among terms (0 for constants); nullopt for zero.
  std::optional<int> min_word_length() const {
    std::optional<int> w;
    for (const auto& [m, c] : terms_) {
      const int l = m.total_degree();
      if (!w || l < *w) w = l;
    }
    return w;
  }

  /// Largest generator index occurring, -1 if none.
  std::ptrdiff_t max_generator_index() const {
    std::ptrdiff_t best = -1;
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] && static_cast<std::ptrdiff_t>(i) > best) best = static_cast<std::ptrdiff_t>(i);
    return best;
  }

  bool only_even_generators() const {
    for (const auto& [m, c] : terms_)
      if (!gens_->only_even(m)) return false;
    return true;
  }

  Element& operator+=(const Element& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Element& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend Element operator*(Element a, const Rational& s) { return a *= s; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }

  friend Element operator*(const Element& a, const Element& b) {
    a.check(b);
    Element r(a.gens_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto prod = multiply_monomials(*a.gens_, ma, mb);
        if (!prod) continue;
        r.add_term(prod->first, prod->second * ca * cb);
      }
    return r;
  }

  Element pow(int k) const {
    Element r = constant(gens_, Rational(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return same_generators(a.gens_, b.gens_) && a.terms_ == b.terms_;
  }

  /// Canonical text form; terms in descending structural monomial order.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      detail::append_term(os, first, it->second, gens_->format_monomial(it->first));
      first = false;
    }
    return os.str();
  }

 private:
  void check(const Element& o) const {
    if (!same_generators(gens_, o.gens_)) throw std::invalid_argument("elements of different algebras");
  }

  GeneratorsPtr gens_;
  TermMap terms_;
};

constexpr int kDefaultTruncationBound = 64;

/// Free graded-commutative algebra with a differential given on generators.
class SullivanAlgebra {
 public:
  SullivanAlgebra(GeneratorsPtr gens, std::vector<Element> differentials, int truncation_bound = kDefaultTruncationBound)
      : gens_(std::move(gens)), d_(std::move(differentials)), truncation_bound_(truncation_bound) {
    if (d_.size() != gens_->size()) throw std::invalid_argument("one differential per generator required");
    for (auto& e : d_)
      if (!same_generators(gens_, e.generators())) throw std::invalid_argument("differential in a foreign algebra");
  }

  /// Differentials by generator name; unspecified generators are closed.
  SullivanAlgebra(GeneratorsPtr gens, const std::vector<std::pair<std::string, Element>>& named,
                  int truncation_bound = kDefaultTruncationBound)
      : SullivanAlgebra(gens, std::vector<Element>(gens->size(), Element(gens)), truncation_bound) {
    for (const auto& [name, e] : named) {
      auto i = gens_->index_of(name);
      if (!i) throw std::invalid_argument("differential for unknown generator '" + name + "'");
      if (!same_generators(gens_, e.generators())) throw std::invalid_argument("differential in a foreign algebra");
      d_[*i] = e;
    }
  }

  const GeneratorsPtr& generators() const { return gens_; }
  std::size_t size() const { return gens_->size(); }
  const SullivanGenerator& generator(std::size_t i) const { return (*gens_)[i]; }
  const Element& differential(std::size_t i) const { return d_[i]; }
  const std::vector<Element>& differentials() const { return d_; }
  int truncation_bound() const { return truncation_bound_; }

  Element gen(const std::string& name) const { return Element::generator(gens_, name); }

  /// d on a canonical monomial via the graded Leibniz rule.
  Element apply(const Monomial& m) const {
    Element out(gens_);
    Monomial prefix(gens_->size());
    int prefix_degree = 0;
    for (std::size_t i = 0; i < gens_->size(); ++i) {
      if (m[i] == 0) continue;
      if (!d_[i].is_zero()) {
        Monomial suffix(gens_->size());
        for (std::size_t k = i + 1; k < gens_->size(); ++k) suffix[k] = m[k];
        Monomial power(gens_->size());
        power[i] = m[i] - 1;
        Element term = Element::monomial(gens_, prefix) * Element::monomial(gens_, power, Rational(m[i])) * d_[i] *
                       Element::monomial(gens_, suffix);
        if (prefix_degree % 2 != 0) term *= Rational(-1);
        out += term;
      }
      prefix[i] = m[i];
      prefix_degree += m[i] * (*gens_)[i].degree;
    }
    return out;
  }

  Element apply(const Element& e) const {
    Element out(gens_);
    for (const auto& [m, c] : e.terms()) out += apply(m) * c;
    return out;
  }

  /// d(V^even) = 0 and d(V^odd) in the subalgebra on even generators.
  bool is_pure() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (generator(i).is_even() && !d_[i].is_zero()) return false;
      if (generator(i).is_odd() && !d_[i].only_even_generators()) return false;
    }
    return true;
  }

  friend bool operator==(const SullivanAlgebra& a, const SullivanAlgebra& b) {
    return same_generators(a.gens_, b.gens_) && a.d_ == b.d_;
  }

 private:
  GeneratorsPtr gens_;
  std::vector<Element> d_;
  int truncation_bound_;
};

/// Generator degrees, sorted ascending (the rational homotopy degrees).
inline std::vector<int> generator_degrees(const SullivanAlgebra& alg) {
  std::vector<int> out;
  for (const auto& g : alg.generators()->list()) out.push_back(g.degree);
  std::sort(out.begin(), out.end());
  return out;
}

struct Violation {
  enum class Kind { GeneratorDegree, Bidegree, DifferentialDegree, Ordering, Minimality, DSquared };
  Kind kind;
  std::string generator;
  std::string message;
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::GeneratorDegree: return "generator-degree";
    case Violation::Kind::Bidegree: return "bidegree";
    case Violation::Kind::DifferentialDegree: return "differential-degree";
    case Violation::Kind::Ordering: return "ordering";
    case Violation::Kind::Minimality: return "minimality";
    case Violation::Kind::DSquared: return "d-squared";
  }
  return "?";
}

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation::Kind k) const {
    for (const auto& v : violations)
      if (v.kind == k) return true;
    return false;
  }
  std::string to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) os << ellk::to_string(v.kind) << " [" << v.generator << "]: " << v.message << "\n";
    return os.str();
  }
};

/// Checks simple connectivity, bidegree consistency, degrees of d, the ordering
/// condition, minimality and d^2 = 0 (for generators up to the truncation bound).
inline ValidationReport validate(const SullivanAlgebra& alg) {
  ValidationReport rep;
  const auto& gens = *alg.generators();
  auto add = [&](Violation::Kind k, const std::string& g, std::string msg) {
    rep.violations.push_back({k, g, std::move(msg)});
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (g.degree < 2) add(Violation::Kind::GeneratorDegree, g.name, "degree must be at least 2");
    if (g.bidegree && g.bidegree->p + g.bidegree->q != g.degree)
      add(Violation::Kind::Bidegree, g.name, "bidegree does not sum to the degree");
    const Element& dg = alg.differential(i);
    if (dg.is_zero()) continue;
    auto deg = dg.degree();
    if (!deg || *deg != g.degree + 1)
      add(Violation::Kind::DifferentialDegree, g.name,
          "d(" + g.name + ") must be homogeneous of degree " + std::to_string(g.degree + 1));
    if (dg.max_generator_index() >= static_cast<std::ptrdiff_t>(i))
      add(Violation::Kind::Ordering, g.name, "d(" + g.name + ") involves " + g.name + " or a later generator");
    auto wl = dg.min_word_length();
    if (wl && *wl < 2) add(Violation::Kind::Minimality, g.name, "d(" + g.name + ") has a linear or constant term");
    if (g.bidegree) {
      for (const auto& [m, c] : dg.terms()) {
        auto b = gens.bidegree(m);
        if (b && !(*b == *g.bidegree)) {
          add(Violation::Kind::Bidegree, g.name, "d(" + g.name + ") does not preserve the bidegree");
          break;
        }
      }
    }
    if (g.degree <= alg.truncation_bound()) {
      Element dd = alg.apply(dg);
      if (!dd.is_zero()) add(Violation::Kind::DSquared, g.name, "d(d(" + g.name + ")) = " + dd.to_string());
    }
  }
  return rep;
}

/// (A ⊗ B, d_A ⊗ 1 ± 1 ⊗ d_B); generator names must be disjoint.
inline SullivanAlgebra tensor(const SullivanAlgebra& a, const SullivanAlgebra& b) {
  std::vector<SullivanGenerator> all = a.generators()->list();
  const auto& bl = b.generators()->list();
  all.insert(all.end(), bl.begin(), bl.end());
  auto gens = make_generators(std::move(all));
  const std::size_t na = a.size();
  auto embed = [&](const Element& e, std::size_t offset) {
    Element out(gens);
    for (const auto& [m, c] : e.terms()) {
      Monomial big(gens->size());
      for (std::size_t i = 0; i < m.size(); ++i) big[offset + i] = m[i];
      out.add_term(big, c);
    }
    return out;
  };
  std::vector<Element> d;
  for (std::size_t i = 0; i < a.size(); ++i) d.push_back(embed(a.differential(i), 0));
  for (std::size_t i = 0; i < b.size(); ++i) d.push_back(embed(b.differential(i), na));
  return SullivanAlgebra(gens, std::move(d), std::min(a.truncation_bound(), b.truncation_bound()));
}

/// Minimal model (∧(w_2, y_{2k+1}), dy = w^{k+1}) of CP^k.
inline SullivanAlgebra projective_space_model(int k, const std::string& w = "w", const std::string& y = "y") {
  if (k < 1) throw std::invalid_argument("projective_space_model: k must be positive");
  auto gens = make_generators({{w, 2, Bidegree{1, 1}}, {y, 2 * k + 1, std::nullopt}});
  return SullivanAlgebra(gens, {{y, Element::generator(gens, w).pow(k + 1)}});
}

}  // namespace ellk
