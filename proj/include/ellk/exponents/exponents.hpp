#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellk/sullivan/betti.hpp"

namespace ellk {

/// Exponents (a_1..a_q; b_1..b_r) of an elliptic space: V^even has generators in
/// degrees 2a_i, V^odd in degrees 2b_j - 1. Stored descending.
struct ExponentTuple {
  std::vector<int> a, b;

  static ExponentTuple make(std::vector<int> a, std::vector<int> b) {
    for (int x : a)
      if (x < 1) throw std::invalid_argument("exponent a_i must be positive");
    for (int x : b)
      if (x < 2) throw std::invalid_argument("exponent b_j must be at least 2");
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    return {std::move(a), std::move(b)};
  }

  std::size_t q() const { return a.size(); }
  std::size_t r() const { return b.size(); }
  int sum_a() const { return std::accumulate(a.begin(), a.end(), 0); }
  int sum_b() const { return std::accumulate(b.begin(), b.end(), 0); }

  /// `a=[1,2] b=[3,4]`, entries ascending.
  std::string to_string() const {
    auto list = [](std::vector<int> v) {
      std::sort(v.begin(), v.end());
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "]";
    };
    return "a=" + list(a) + " b=" + list(b);
  }

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
};

/// Canonical listing order: by q, then a ascending-lex, then b ascending-lex.
inline bool canonical_less(const ExponentTuple& x, const ExponentTuple& y) {
  if (x.q() != y.q()) return x.q() < y.q();
  std::vector<int> xa(x.a.rbegin(), x.a.rend()), ya(y.a.rbegin(), y.a.rend());
  if (xa != ya) return xa < ya;
  std::vector<int> xb(x.b.rbegin(), x.b.rend()), yb(y.b.rbegin(), y.b.rend());
  return xb < yb;
}

/// m = 2(Σb - Σa) - (r - q).
inline int formal_dimension(const ExponentTuple& t) {
  const int m = 2 * (t.sum_b() - t.sum_a()) - (static_cast<int>(t.r()) - static_cast<int>(t.q()));
  if (m <= 0 || m % 2 != 0) throw std::invalid_argument("invalid exponents " + t.to_string() + ": formal dimension " + std::to_string(m));
  return m;
}

inline bool satisfies_constraints(const ExponentTuple& t, int m) {
  const int q = static_cast<int>(t.q()), r = static_cast<int>(t.r());
  if (q > r || (r - q) % 2 != 0) return false;
  if (2 * (t.sum_b() - t.sum_a()) - (r - q) != m) return false;
  for (std::size_t i = 0; i < t.q(); ++i)
    if (t.b[i] < 2 * t.a[i]) return false;
  if (2 * t.sum_a() > m) return false;
  int odd = 0;
  for (int x : t.b) odd += 2 * x - 1;
  return odd <= 2 * m - 1;
}

/// Every s of the a_i admit at least s of the b_j written as N-combinations of
/// those a_i with at least two summands (the Friedlander–Halperin condition).
inline bool strong_arithmetic_condition(const ExponentTuple& t) {
  const std::size_t q = t.q();
  for (std::uint32_t mask = 1; mask < (1u << q); ++mask) {
    std::vector<int> gens;
    for (std::size_t i = 0; i < q; ++i)
      if (mask & (1u << i)) gens.push_back(t.a[i]);
    const int top = t.b.empty() ? 0 : t.b.front();
    // reach[x][c]: x is a sum of c (capped at 2) chosen generators
    std::vector<std::array<bool, 3>> reach(static_cast<std::size_t>(top) + 1, {false, false, false});
    reach[0][0] = true;
    for (int x = 1; x <= top; ++x)
      for (int g : gens)
        if (g <= x)
          for (int c = 0; c < 3; ++c)
            if (reach[static_cast<std::size_t>(x - g)][static_cast<std::size_t>(c)])
              reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(std::min(c + 1, 2))] = true;
    std::size_t hits = 0;
    for (int bj : t.b)
      if (reach[static_cast<std::size_t>(bj)][2]) ++hits;
    if (hits < static_cast<std::size_t>(std::popcount(mask))) return false;
  }
  return true;
}

struct EnumerateOptions {
  bool equal_ranks = false;
  /// some a_i = 1, i.e. H^2 != 0 (Kähler class)
  bool require_degree_two = true;
  bool strong_arithmetic = true;
};

/// All exponent tuples with formal dimension m, sorted canonically.
inline std::vector<ExponentTuple> enumerate(int m, const EnumerateOptions& opt) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("enumerate: m must be a positive even integer");
  std::vector<ExponentTuple> out;
  std::vector<int> a, b;
  // descending multisets of `count` parts in [lo, hi] with the given sum
  std::function<void(std::vector<int>&, int, int, int, int, const std::function<void()>&)> parts =
      [&](std::vector<int>& v, int count, int sum, int lo, int hi, const std::function<void()>& done) {
        if (count == 0) {
          if (sum == 0) done();
          return;
        }
        for (int x = std::min(hi, sum - lo * (count - 1)); x >= lo; --x) {
          if (x * count < sum) break;
          v.push_back(x);
          parts(v, count - 1, sum - x, lo, x, done);
          v.pop_back();
        }
      };
  for (int q = 1; 2 * q <= m; ++q) {
    for (int sa = q; 2 * sa <= m; ++sa) {
      parts(a, q, sa, 1, m / 2, [&] {
        for (int r = q; 3 * r <= 2 * m - 1; ++r) {
          if ((r - q) % 2 != 0 || (opt.equal_ranks && r != q)) continue;
          const int sb = (m + (r - q)) / 2 + sa;
          parts(b, r, sb, 2, m, [&] {
            ExponentTuple t{a, b};
            if (!satisfies_constraints(t, m)) return;
            if (opt.require_degree_two && std::find(a.begin(), a.end(), 1) == a.end()) return;
            if (opt.strong_arithmetic && !strong_arithmetic_condition(t)) return;
            out.push_back(t);
          });
        }
      });
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

inline std::vector<ExponentTuple> enumerate(int m, bool equal_ranks) {
  EnumerateOptions opt;
  opt.equal_ranks = equal_ranks;
  return enumerate(m, opt);
}

/// Coefficients of ∏(1 - t^{2b_j}) / ∏(1 - t^{2a_i}), degrees 0..m.
inline BettiVector hilbert_series(const ExponentTuple& t) {
  if (t.q() != t.r()) throw std::invalid_argument("hilbert_series: r != q is not a complete intersection");
  const int m = formal_dimension(t);
  std::vector<std::int64_t> p{1};
  for (int x : t.b) {
    std::vector<std::int64_t> next(p.size() + static_cast<std::size_t>(2 * x), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i];
      next[i + static_cast<std::size_t>(2 * x)] -= p[i];
    }
    p = std::move(next);
  }
  for (int x : t.a) {
    const std::size_t k = static_cast<std::size_t>(2 * x);
    if (p.size() <= k) throw std::invalid_argument("hilbert_series: " + t.to_string() + " is not a polynomial");
    std::vector<std::int64_t> quot(p.size() - k, 0);
    for (std::size_t i = 0; i < quot.size(); ++i) quot[i] = p[i] + (i >= k ? quot[i - k] : 0);
    std::vector<std::int64_t> check(p.size(), 0);
    for (std::size_t i = 0; i < quot.size(); ++i) {
      check[i] += quot[i];
      check[i + k] -= quot[i];
    }
    if (check != p) throw std::invalid_argument("hilbert_series: " + t.to_string() + " is not a polynomial");
    p = std::move(quot);
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (static_cast<int>(p.size()) != m + 1)
    throw std::invalid_argument("hilbert_series: top degree of " + t.to_string() + " differs from formal dimension");
  for (auto c : p)
    if (c < 0) throw std::invalid_argument("hilbert_series: negative coefficient for " + t.to_string());
  return BettiVector{p};
}

/// ∏b_j / ∏a_i, cross-checked against the Hilbert series.
inline std::int64_t total_dimension(const ExponentTuple& t) {
  if (t.q() != t.r()) throw std::invalid_argument("total_dimension: r != q");
  std::int64_t num = 1, den = 1;
  for (int x : t.b) num *= x;
  for (int x : t.a) den *= x;
  if (num % den != 0) throw std::invalid_argument("total_dimension: non-integer ratio for " + t.to_string());
  const std::int64_t total = num / den;
  if (hilbert_series(t).total() != total)
    throw std::logic_error("total_dimension: product formula disagrees with the Hilbert series");
  return total;
}

enum class OddBettiBound {
  Kahler,    ///< Σa >= n-3 or Σb >= 2n-2
  Elliptic,  ///< Σa >= n-2 or Σb >= 2n-1
};

/// Arithmetic sufficient condition for all odd Betti numbers to vanish, formal dimension 2n.
inline bool odd_betti_forced_zero(const ExponentTuple& t, int n, OddBettiBound bound = OddBettiBound::Kahler) {
  if (formal_dimension(t) != 2 * n)
    throw std::invalid_argument("odd_betti_forced_zero: formal dimension of " + t.to_string() + " is not " +
                                std::to_string(2 * n));
  const int slack = bound == OddBettiBound::Kahler ? 0 : 1;
  return t.sum_a() >= n - 3 + slack || t.sum_b() >= 2 * n - 2 + slack;
}

/// Cohomology generated by H^2 forces every even generator into degree 2.
inline bool generated_in_degree_two(const ExponentTuple& t) {
  if (t.q() != t.r()) throw std::invalid_argument("generated_in_degree_two: r != q");
  return std::all_of(t.a.begin(), t.a.end(), [](int x) { return x == 1; });
}

struct LambdaSolution {
  int n = 0;
  ExponentTuple tuple;
};

/// Odd n with q = 1, a = (1), b = ((n-1)/2, (n-1)/2, n-2) and formal dimension 2n.
/// The search range covers every n where the formula could balance; exactly one survives.
inline LambdaSolution solve_lambda_equality() {
  std::vector<LambdaSolution> found;
  for (int n = 3; n <= 201; n += 2) {
    if ((n - 1) / 2 < 2) continue;  // b_j >= 2
    auto t = ExponentTuple::make({1}, {(n - 1) / 2, (n - 1) / 2, n - 2});
    if (2 * (t.sum_b() - t.sum_a()) - 2 == 2 * n) found.push_back({n, t});
  }
  if (found.size() != 1) throw std::logic_error("solve_lambda_equality: expected a unique solution");
  return found.front();
}

}  // namespace ellk
