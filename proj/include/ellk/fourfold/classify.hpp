#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ellk/ci/complete_intersection.hpp"
#include "ellk/exponents/exponents.hpp"
#include "ellk/fourfold/models.hpp"
#include "ellk/hodge/filters.hpp"
#include "ellk/sullivan/algebra.hpp"

namespace ellk {

enum class RecordStatus { Admitted, Excluded, AdmittedUnrealized };

inline const char* to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::Admitted: return "admitted";
    case RecordStatus::Excluded: return "excluded";
    case RecordStatus::AdmittedUnrealized: return "admitted-unrealized";
  }
  return "?";
}

/// Even fourfold diamond shape addressed by b_2, b_4, h^{2,0} (plus the shape's own name).
struct DiamondShape {
  std::int64_t b2 = 0, b4 = 0, h20 = 0;
  std::string name;
  friend bool operator==(const DiamondShape&, const DiamondShape&) = default;
};

struct FilterResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<std::pair<std::string, std::int64_t>> witness;
};

struct ClassificationRecord {
  std::string label;
  std::variant<ExponentTuple, DiamondShape> source;
  std::optional<HodgeDiamond> diamond;
  RecordStatus status = RecordStatus::Admitted;
  std::vector<FilterResult> filters;
  std::string realization;
  /// parameter samples used by sample-based filters
  std::vector<std::pair<Rational, Rational>> samples;
  std::vector<std::string> notes;

  std::string source_string() const {
    if (auto t = std::get_if<ExponentTuple>(&source)) return t->to_string();
    const auto& s = std::get<DiamondShape>(source);
    return "b2=" + std::to_string(s.b2) + " b4=" + std::to_string(s.b4) + " h20=" + std::to_string(s.h20) +
           (s.name.empty() ? "" : " " + s.name);
  }

  const FilterResult* failing_filter() const {
    for (const auto& f : filters)
      if (!f.passed) return &f;
    return nullptr;
  }
};

struct Realization {
  std::string label;
  std::string name;
  HodgeDiamond diamond;
  SullivanAlgebra model;
};

/// h^{p,q}(X × Y) = Σ h^{a,b}(X) h^{p-a,q-b}(Y).
inline HodgeDiamond kunneth(const HodgeDiamond& x, const HodgeDiamond& y) {
  HodgeDiamond r = HodgeDiamond::zero(x.n + y.n);
  for (int p = 0; p <= r.n; ++p)
    for (int q = 0; q <= r.n; ++q) {
      std::int64_t s = 0;
      for (int a = 0; a <= x.n; ++a)
        for (int b = 0; b <= x.n; ++b) s += x.at(a, b) * y.at(p - a, q - b);
      r.set(p, q, s);
    }
  return r;
}

inline HodgeDiamond projective_diamond(int n) {
  HodgeDiamond d = HodgeDiamond::zero(n);
  for (int p = 0; p <= n; ++p) d.set(p, p, 1);
  return d;
}

/// Quadric fourfold cohomology ring Q[w,x]/(wx, x² - w⁴), deg x = 4.
inline RingPresentation quadric_ring() {
  auto ring = PolyRing::make({{"w", 2}, {"x", 4}});
  auto w = Polynomial::variable(ring, "w"), x = Polynomial::variable(ring, "x");
  return RingPresentation{ring, {w * x, x * x - w.pow(4)}, "w"};
}

/// The six level-0 realizations: CP⁴, the quadric, and products of projective spaces.
inline std::vector<Realization> realize_products() {
  auto product = [](const std::vector<int>& dims) {
    HodgeDiamond d = projective_diamond(dims[0]);
    SullivanAlgebra m = projective_space_model(dims[0], "w1", "y1");
    for (std::size_t i = 1; i < dims.size(); ++i) {
      d = kunneth(d, projective_diamond(dims[i]));
      const std::string k = std::to_string(i + 1);
      m = tensor(m, projective_space_model(dims[i], "w" + k, "y" + k));
    }
    return std::pair(d, m);
  };
  std::vector<Realization> out;
  {
    auto [d, m] = product({4});
    out.push_back({"a", "CP^4", d, m});
  }
  {
    const auto pres = quadric_ring();
    const auto d = ci_diamond(CIConfig::make(4, {2}));
    const auto hv = hilbert_values(pres.basis(), 8);
    for (int k = 0; k <= 8; ++k)
      if (static_cast<std::int64_t>(hv[static_cast<std::size_t>(k)]) != d.betti()[static_cast<std::size_t>(k)])
        throw std::logic_error("realize_products: quadric ring does not match the quadric diamond");
    out.push_back({"b", "quadric V(2)", d, pure_model(pres, {"u", "v"})});
  }
  const std::vector<std::pair<std::vector<int>, std::string>> products = {
      {{1, 3}, "CP^1 x CP^3"}, {{2, 2}, "CP^2 x CP^2"}, {{1, 1, 2}, "CP^1 x CP^1 x CP^2"}, {{1, 1, 1, 1}, "(CP^1)^4"}};
  const char* labels = "cdef";
  for (std::size_t i = 0; i < products.size(); ++i) {
    auto [d, m] = product(products[i].first);
    out.push_back({std::string(1, labels[i]), products[i].second, d, m});
  }
  return out;
}

namespace detail {

inline const std::map<std::vector<std::int64_t>, std::string>& level_zero_labels() {
  static const std::map<std::vector<std::int64_t>, std::string> m = {
      {{1, 1, 1, 1, 1}, "a"}, {{1, 1, 2, 1, 1}, "b"}, {{1, 2, 2, 2, 1}, "c"},
      {{1, 2, 3, 2, 1}, "d"}, {{1, 3, 4, 3, 1}, "e"}, {{1, 4, 6, 4, 1}, "f"}};
  return m;
}

inline FilterResult equal_ranks_filter(const ExponentTuple& t) {
  const bool forced = odd_betti_forced_zero(t, 4);
  const bool equal = t.q() == t.r();
  FilterResult f{"odd_betti_vanish", !(forced && !equal), "", {}};
  f.witness = {{"sum_a", t.sum_a()}, {"sum_b", t.sum_b()}, {"q", static_cast<std::int64_t>(t.q())},
               {"r", static_cast<std::int64_t>(t.r())}};
  f.detail = forced ? "odd Betti numbers vanish (sum a >= n-3 or sum b >= 2n-2), so r = q is required"
                    : "vanishing of odd Betti numbers not forced";
  if (!f.passed) f.detail += "; here r - q = " + std::to_string(t.r() - t.q());
  return f;
}

inline FilterResult lefschetz_filter(const ExponentTuple& t) {
  const auto b = hilbert_series(t);
  FilterResult f{"hard_lefschetz", hard_lefschetz_admissible(b), "", {}};
  f.witness = {{"b0", b[0]}, {"b2", b[2]}, {"b4", b[4]}};
  f.detail = f.passed ? "b0 <= b2 <= b4" : "b4=" + std::to_string(b[4]) + " < b2=" + std::to_string(b[2]);
  return f;
}

/// If some even generator sits above degree 2, then (b2, b4) = (1, 2).
inline FilterResult generation_filter(const ExponentTuple& t) {
  const auto b = hilbert_series(t);
  const bool gen = generated_in_degree_two(t);
  const bool exception = b[2] == 1 && b[4] == 2;
  FilterResult f{"degree_two_generation", gen || exception, "", {}};
  f.witness = {{"a_max", t.a.front()}, {"b2", b[2]}, {"b4", b[4]}};
  if (gen)
    f.detail = "all a_i = 1";
  else if (exception)
    f.detail = "a-exponent " + std::to_string(t.a.front()) + " allowed by the exception (b2,b4)=(1,2)";
  else
    f.detail = "a-exponent " + std::to_string(t.a.front()) + " with (b2,b4)=(" + std::to_string(b[2]) + "," +
               std::to_string(b[4]) + ") outside the exception set {(1,2)}";
  return f;
}

inline FilterResult hodge_riemann_result(const HodgeDiamond& d) {
  FilterResult f{"hodge_riemann", hodge_riemann_filter(d), "", {}};
  f.witness = {{"signature", signature(d)}, {"b4", d.betti()[4]}, {"h31", d.at(3, 1)}};
  f.detail = "signature " + std::to_string(signature(d)) + (f.passed ? "" : " = b4 with h^{3,1} > 0");
  return f;
}

inline FilterResult shape_i_result(const std::vector<std::pair<Rational, Rational>>& samples) {
  if (samples.empty()) throw std::invalid_argument("exclusion_b2_4_shape_i: empty sample list");
  FilterResult f{"shape_i_regular_sequence", false, "", {}};
  std::int64_t nonregular = 0, structural = 0;
  std::string per;
  for (const auto& [k, l] : samples) {
    const auto c = check_shape_i(k, l);
    if (c.elliptic)
      throw std::logic_error("exclusion_b2_4_shape_i: regular sequence at (k,l)=(" + format_params(c.params) + ")");
    ++nonregular;
    if (*c.free_variables) ++structural;
    per += (per.empty() ? "" : "; ") + ("(" + format_params(c.params) + ") non-regular");
  }
  f.witness = {{"samples", static_cast<std::int64_t>(samples.size())}, {"non_regular", nonregular},
               {"no_pure_power_of_w_or_x", structural}};
  f.detail = "y^2, z^2, xy-kwy, xz-lwz is not a regular sequence, verified on samples: " + per;
  return f;
}

}  // namespace detail

/// Record excluding the b2 = 4 shape (i) via the non-regularity of its pure model.
inline ClassificationRecord exclusion_b2_4_shape_i(const std::vector<std::pair<Rational, Rational>>& samples) {
  ClassificationRecord r;
  r.label = "b2=4 shape (i)";
  r.source = DiamondShape{4, 6, 1, "(i)"};
  r.diamond = HodgeDiamond::fourfold(1, 2, 0, 1, 4);
  r.status = RecordStatus::Excluded;
  r.samples = samples;
  r.filters.push_back(detail::shape_i_result(samples));
  r.notes.push_back("h^{3,1} < h^{2,0} h^{1,1} forces a relation xy - kwy with y spanning H^{2,0}");
  return r;
}

/// Fourfold pipeline: admitted diamonds (a)-(g) followed by the exclusion records.
inline std::vector<ClassificationRecord> classify(
    const std::vector<std::pair<Rational, Rational>>& shape_i_samples = default_samples_i()) {
  constexpr int n = 4, m = 8;
  std::vector<ClassificationRecord> admitted, excluded;
  const auto realizations = realize_products();

  // step 1: unequal ranks contradict the forced vanishing of odd Betti numbers
  std::vector<ExponentTuple> equal;
  for (const auto& t : enumerate(m, false)) {
    if (t.q() == t.r()) {
      equal.push_back(t);
      continue;
    }
    ClassificationRecord r;
    r.label = "(" + t.to_string() + ")";
    r.source = t;
    r.status = RecordStatus::Excluded;
    r.filters.push_back(detail::equal_ranks_filter(t));
    if (r.filters.back().passed) throw std::logic_error("classify: r > q tuple with odd Betti numbers not forced");
    excluded.push_back(std::move(r));
  }

  // steps 2 and 3: Kähler filters on r = q tuples, then the level <= 0 diamonds
  std::vector<ExponentTuple> degree_two_tuples;
  for (const auto& t : equal) {
    ClassificationRecord r;
    r.source = t;
    r.filters.push_back(detail::equal_ranks_filter(t));
    r.filters.push_back(detail::lefschetz_filter(t));
    if (r.filters.back().passed) r.filters.push_back(detail::generation_filter(t));
    if (r.failing_filter()) {
      r.label = "(" + t.to_string() + ")";
      r.status = RecordStatus::Excluded;
      excluded.push_back(std::move(r));
      continue;
    }
    if (generated_in_degree_two(t)) degree_two_tuples.push_back(t);
    const auto betti = hilbert_series(t);
    auto it = detail::level_zero_labels().find(betti.even_part());
    if (it == detail::level_zero_labels().end())
      throw std::logic_error("classify: unexpected Betti numbers " + betti.to_string());
    r.label = it->second;
    r.diamond = diamond_from_betti(betti, n);
    r.status = RecordStatus::Admitted;
    for (const auto& real : realizations)
      if (real.label == r.label) {
        if (!(real.diamond == *r.diamond)) throw std::logic_error("classify: realization mismatch for " + r.label);
        r.realization = real.name;
      }
    if (r.realization.empty()) throw std::logic_error("classify: no realization for " + r.label);
    admitted.push_back(std::move(r));
  }

  // step 4: positive level. The first positive level sits in degree k <= (2n-1)/3, so k = 2
  // (odd Betti numbers vanish) and h^{2,0} >= 1. Generation in degree 2 makes every a_i = 1,
  // so b2 = q <= m/2 and b2 = 2h^{2,0} + h^{1,1} >= 3.
  for (const auto& t : degree_two_tuples) {
    const auto b2 = static_cast<std::int64_t>(t.q());
    if (b2 < 3) continue;
    const auto betti = hilbert_series(t);
    const std::int64_t b4 = betti[4];
    // second route: dim S²H² - dim(V³/ker d) + dim ker(d|V⁴)
    std::int64_t v3 = 0;
    for (int b : t.b) v3 += (b == 2);
    const std::int64_t b4_alt = b2 * (b2 + 1) / 2 - v3 + 0;
    if (b4_alt != b4) throw std::logic_error("classify: b4 routes disagree for " + t.to_string());
    for (std::int64_t h20 = 1; 2 * h20 + 1 <= b2; ++h20) {
      for (const auto& d : enumerate_positive_level_diamonds(b2, b4, h20)) {
        ClassificationRecord r;
        const std::int64_t h11 = d.at(1, 1), h31 = d.at(3, 1);
        const std::string shape_name = "(0," + std::to_string(h31) + "," + std::to_string(d.at(2, 2)) + "," +
                                       std::to_string(h31) + ",0)";
        r.source = DiamondShape{b2, b4, h20, shape_name};
        r.diamond = d;
        r.notes.push_back("b4 = " + std::to_string(b4) + " from the Hilbert series of " + t.to_string() +
                          "; S^2 route " + std::to_string(b2 * (b2 + 1) / 2) + "-" + std::to_string(v3) + "+0 = " +
                          std::to_string(b4_alt));
        FilterResult level{"level_bound", level_bound_check(d), "first positive level in degree 2 <= (2n-1)/3",
                           {{"k", 2}}};
        FilterResult genus{"geometric_genus", geometric_genus_filter(d), "p_g = 0 and h^{0,p} symmetric", {}};
        r.filters = {level, genus, detail::hodge_riemann_result(d)};
        if (!r.filters.back().passed) {
          r.label = "b2=" + std::to_string(b2) + " shape";
          r.status = RecordStatus::Excluded;
          excluded.push_back(std::move(r));
          continue;
        }
        if (b2 == 4 && h31 < h20 * h11) {
          auto ex = exclusion_b2_4_shape_i(shape_i_samples);
          if (!(*ex.diamond == d)) throw std::logic_error("classify: shape (i) diamond mismatch");
          ex.source = r.source;
          ex.notes.insert(ex.notes.begin(), r.notes.begin(), r.notes.end());
          ex.filters.insert(ex.filters.begin(), r.filters.begin(), r.filters.end());
          excluded.push_back(std::move(ex));
          continue;
        }
        r.label = "g";
        r.status = RecordStatus::AdmittedUnrealized;
        r.realization = "unrealized";
        r.notes.push_back("no compact Kähler realization known");
        admitted.push_back(std::move(r));
      }
    }
  }

  std::sort(admitted.begin(), admitted.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  if (admitted.size() != 7) throw std::logic_error("classify: expected 7 admitted diamonds");
  std::vector<ClassificationRecord> out = std::move(admitted);
  for (auto& r : excluded) out.push_back(std::move(r));
  return out;
}

/// Re-runs every filter of a record on its stored inputs; true iff all verdicts reproduce.
inline bool reverify(const ClassificationRecord& r) {
  for (const auto& f : r.filters) {
    std::optional<FilterResult> again;
    if (auto t = std::get_if<ExponentTuple>(&r.source)) {
      if (f.name == "odd_betti_vanish") again = detail::equal_ranks_filter(*t);
      else if (f.name == "hard_lefschetz") again = detail::lefschetz_filter(*t);
      else if (f.name == "degree_two_generation") again = detail::generation_filter(*t);
    } else if (r.diamond) {
      if (f.name == "hodge_riemann") again = detail::hodge_riemann_result(*r.diamond);
      else if (f.name == "level_bound") again = FilterResult{f.name, level_bound_check(*r.diamond), f.detail, f.witness};
      else if (f.name == "geometric_genus")
        again = FilterResult{f.name, geometric_genus_filter(*r.diamond), f.detail, f.witness};
      else if (f.name == "shape_i_regular_sequence") again = detail::shape_i_result(r.samples);
    }
    if (!again || again->passed != f.passed || again->witness != f.witness) return false;
  }
  return true;
}

}  // namespace ellk
