#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellk/exactalg/groebner.hpp"
#include "ellk/exactalg/rational.hpp"
#include "ellk/hodge/diamond.hpp"
#include "ellk/hodge/filters.hpp"

namespace ellk {

/// Smooth complete intersection of the given degrees, complex dimension n,
/// in P^{n + #degrees}. Degrees are kept descending with 1s removed.
struct CIConfig {
  int n = 0;
  std::vector<int> degrees;

  static CIConfig make(int n, std::vector<int> degrees) {
    if (n < 1) throw std::invalid_argument("CIConfig: dimension must be positive");
    for (int d : degrees)
      if (d < 1) throw std::invalid_argument("CIConfig: degrees must be positive");
    degrees.erase(std::remove(degrees.begin(), degrees.end(), 1), degrees.end());
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return {n, std::move(degrees)};
  }

  int ambient_dimension() const { return n + static_cast<int>(degrees.size()); }
  bool is_projective_space() const { return degrees.empty(); }
  bool is_quadric() const { return degrees.size() == 1 && degrees[0] == 2; }

  std::string to_string() const {
    if (degrees.empty()) return "P^" + std::to_string(n);
    std::string s = "(";
    for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
    return s + ") in P^" + std::to_string(ambient_dimension());
  }

  friend bool operator==(const CIConfig&, const CIConfig&) = default;
};

namespace detail {

/// Bivariate power series in y, z truncated at total degree N; c[i][j] is the y^i z^j coefficient.
struct Series2 {
  int N;
  std::vector<std::vector<BigInt>> c;

  explicit Series2(int N) : N(N), c(static_cast<std::size_t>(N) + 1, std::vector<BigInt>(static_cast<std::size_t>(N) + 1)) {}

  BigInt& at(int i, int j) { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const BigInt& at(int i, int j) const { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  friend Series2 operator*(const Series2& a, const Series2& b) {
    Series2 r(a.N);
    for (int i = 0; i <= a.N; ++i)
      for (int j = 0; i + j <= a.N; ++j) {
        if (a.at(i, j) == 0) continue;
        for (int k = 0; i + k <= a.N; ++k)
          for (int l = 0; i + j + k + l <= a.N; ++l)
            if (b.at(k, l) != 0) r.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
      }
    return r;
  }

  /// 1/s for a series with constant term 1.
  Series2 inverse() const {
    if (at(0, 0) != 1) throw std::logic_error("Series2::inverse: constant term must be 1");
    Series2 r(N);
    r.at(0, 0) = 1;
    for (int t = 1; t <= N; ++t)
      for (int i = 0; i <= t; ++i) {
        BigInt acc = 0;
        for (int k = 0; k <= i; ++k)
          for (int l = 0; l <= t - i; ++l)
            if ((k || l) && at(k, l) != 0) acc += at(k, l) * r.at(i - k, t - i - l);
        r.at(i, t - i) = -acc;
      }
    return r;
  }
};

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// ((1+z)^d - (1+y)^d) / ((1+y)^d z - (1+z)^d y), both sides divided by (z - y) first.
inline Series2 hypersurface_factor(int d, int N) {
  Series2 num(N), den(N);
  // (z^k - y^k)/(z - y) = Σ_{i+j=k-1} y^i z^j
  for (int k = 1; k <= d; ++k)
    for (int i = 0; i <= k - 1 && k - 1 <= N; ++i) num.at(i, k - 1 - i) += binomial(d, k);
  // ((1+y)^d z - (1+z)^d y)/(z - y) = 1 - Σ_{k>=2} C(d,k) yz (z^{k-1} - y^{k-1})/(z - y)
  den.at(0, 0) = 1;
  for (int k = 2; k <= d; ++k)
    for (int i = 0; i <= k - 2 && k <= N; ++i) den.at(i + 1, k - 2 - i + 1) -= binomial(d, k);
  return num * den.inverse();
}

}  // namespace detail

/// Hodge numbers h^{p,n-p} of the middle cohomology, p = n..0, including the ambient
/// class h^{n/2,n/2} for even n. Primitive parts come from Hirzebruch's generating function
///   Σ h_prim^{p,q} y^p z^q = [Π_i F_{d_i}(y,z) - 1] / ((1+y)(1+z)),
///   F_d = ((1+z)^d - (1+y)^d) / ((1+y)^d z - (1+z)^d y).
inline std::vector<BigInt> middle_hodge_row(const CIConfig& c) {
  const int N = c.n;
  detail::Series2 prod(N);
  prod.at(0, 0) = 1;
  for (int d : c.degrees) prod = prod * detail::hypersurface_factor(d, N);
  prod.at(0, 0) -= 1;
  detail::Series2 inv(N);  // 1/((1+y)(1+z))
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j) inv.at(i, j) = ((i + j) % 2 ? -1 : 1);
  const auto prim = prod * inv;
  std::vector<BigInt> row;
  for (int p = N; p >= 0; --p) row.push_back(prim.at(p, N - p));
  if (N % 2 == 0) row[static_cast<std::size_t>(N / 2)] += 1;
  return row;
}

inline BigInt middle_betti(const CIConfig& c) {
  BigInt s = 0;
  for (const auto& v : middle_hodge_row(c)) s += v;
  return s;
}

/// Level of H^n: largest |2p - n| with h^{p,n-p} != 0, kLevelNegInfinity if H^n = 0.
inline int middle_level(const CIConfig& c) {
  const auto row = middle_hodge_row(c);
  int level = kLevelNegInfinity;
  for (int i = 0; i <= c.n; ++i)
    if (row[static_cast<std::size_t>(i)] != 0) level = std::max(level, std::abs(2 * (c.n - i) - c.n));
  return level;
}

/// Full diamond: projective-space classes off the middle (Lefschetz), the computed middle row.
/// Entries must fit in 64 bits.
inline HodgeDiamond ci_diamond(const CIConfig& c) {
  HodgeDiamond d = HodgeDiamond::zero(c.n);
  for (int p = 0; p <= c.n; ++p) d.set(p, p, 1);
  const auto row = middle_hodge_row(c);
  for (int i = 0; i <= c.n; ++i) {
    if (!row[static_cast<std::size_t>(i)].fits_slong_p()) throw std::overflow_error("ci_diamond: Hodge number too large");
    d.set(c.n - i, i, row[static_cast<std::size_t>(i)].get_si());
  }
  return d;
}

/// χ = (Π d_i) · [h^n] (1+h)^{N+1} / Π (1 + d_i h), from the Chern classes of the normal bundle.
inline BigInt euler_characteristic_chern(const CIConfig& c) {
  const int n = c.n, N = c.ambient_dimension();
  std::vector<BigInt> s(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(k)] = detail::binomial(N + 1, k);
  for (int d : c.degrees)  // divide by (1 + d h)
    for (int k = 1; k <= n; ++k) s[static_cast<std::size_t>(k)] -= d * s[static_cast<std::size_t>(k - 1)];
  BigInt deg = 1;
  for (int d : c.degrees) deg *= d;
  return deg * s[static_cast<std::size_t>(n)];
}

/// χ from the Hodge numbers: n+1 ambient classes off the middle, plus (-1)^n times the middle Betti number.
inline BigInt euler_characteristic_hodge(const CIConfig& c) {
  const BigInt off_middle = c.n % 2 == 0 ? BigInt(c.n) : BigInt(c.n + 1);
  const BigInt mid = middle_betti(c);
  return off_middle + (c.n % 2 == 0 ? mid : BigInt(-mid));
}

/// Primitive h^{n-p,p} of a degree-d hypersurface as the Hilbert function of the Fermat
/// Jacobian ring Q[x_0..x_{n+1}]/(x_i^{d-1}) in polynomial degree (p+1)d - n - 2.
inline BigInt jacobian_oracle(int n, int d, int p) {
  if (n < 1 || d < 2 || p < 0 || p > n) throw std::invalid_argument("jacobian_oracle: bad arguments");
  const int target = (p + 1) * d - n - 2;
  if (target < 0) return 0;
  std::vector<PolyRing::Variable> vars;
  for (int i = 0; i <= n + 1; ++i) vars.push_back({"x" + std::to_string(i), 2});
  auto ring = PolyRing::make(std::move(vars));
  std::vector<Polynomial> gens;
  for (int i = 0; i <= n + 1; ++i) gens.push_back(Polynomial::variable(ring, static_cast<std::size_t>(i), d - 1));
  GroebnerBasis gb = buchberger(gens);
  return BigInt(static_cast<unsigned long>(hilbert_function(gb, 2 * target)));
}

struct CandidateVerdict {
  bool candidate = false;
  std::string reason;
};

/// Necessary condition for elliptic homotopy type: even n needs dim H^n <= 2 and level <= 0,
/// odd n needs H^n = 0.
inline CandidateVerdict elliptic_candidate(const CIConfig& c) {
  const BigInt b = middle_betti(c);
  const int level = middle_level(c);
  const std::string bs = "b" + std::to_string(c.n) + "=" + b.get_str();
  if (c.n % 2 == 0) {
    if (b > 2) return {false, bs + " > 2"};
    if (level > 0) return {false, "level " + std::to_string(level) + " > 0"};
    return {true, bs + ", level 0"};
  }
  if (b != 0) return {false, bs + " != 0"};
  return {true, bs};
}

struct ScanEntry {
  CIConfig config;
  std::vector<BigInt> middle_row;
  int level = kLevelNegInfinity;
  CandidateVerdict verdict;
};

/// Degree multisets (parts >= 2, descending) with sum <= max_total, the empty one first.
inline std::vector<std::vector<int>> degree_multisets(int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int hi) {
    out.push_back(cur);
    for (int d = std::min(hi, remaining); d >= 2; --d) {
      cur.push_back(d);
      rec(remaining - d, d);
      cur.pop_back();
    }
  };
  rec(max_total, max_total);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

/// Every configuration with 3 <= n <= max_n and Σ degrees <= max_total_degree, with verdicts.
inline std::vector<ScanEntry> scan_report(int max_n, int max_total_degree, unsigned jobs = 1) {
  if (max_n < 3) throw std::invalid_argument("scan: max_n must be at least 3");
  if (max_total_degree < 0) throw std::invalid_argument("scan: negative degree bound");
  std::vector<CIConfig> configs;
  for (int n = 3; n <= max_n; ++n)
    for (auto& ds : degree_multisets(max_total_degree)) configs.push_back(CIConfig::make(n, ds));
  std::vector<ScanEntry> out(configs.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < configs.size(); i += step)
      out[i] = {configs[i], middle_hodge_row(configs[i]), middle_level(configs[i]), elliptic_candidate(configs[i])};
  };
  jobs = std::max(1u, jobs);
  std::vector<std::future<void>> tasks;
  for (unsigned j = 1; j < jobs; ++j) tasks.push_back(std::async(std::launch::async, work, j, jobs));
  work(0, jobs);
  for (auto& t : tasks) t.get();
  return out;
}

/// Configurations passing elliptic_candidate.
inline std::vector<CIConfig> scan(int max_n, int max_total_degree, unsigned jobs = 1) {
  std::vector<CIConfig> out;
  for (auto& e : scan_report(max_n, max_total_degree, jobs))
    if (e.verdict.candidate) out.push_back(e.config);
  return out;
}

}  // namespace ellk
