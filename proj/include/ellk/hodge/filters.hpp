#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ellk/hodge/diamond.hpp"

namespace ellk {

/// Cup product with a Kähler class is injective below the middle: b_k <= b_{k+2} for k < n.
inline bool hard_lefschetz_admissible(const BettiVector& b) {
  const int top = b.top_degree();
  if (top < 0) return false;
  const int n = top / 2;
  for (int k = 0; k < n; ++k)
    if (b[static_cast<std::size_t>(k)] > b[static_cast<std::size_t>(k + 2)]) return false;
  return true;
}

/// Σ (-1)^q h^{p,q}; defined for even n.
inline std::int64_t signature(const HodgeDiamond& d) {
  if (d.n % 2 != 0) throw std::invalid_argument("signature: complex dimension must be even");
  std::int64_t s = 0;
  for (int p = 0; p <= d.n; ++p)
    for (int q = 0; q <= d.n; ++q) s += (q % 2 ? -1 : 1) * d.at(p, q);
  return s;
}

/// Stands for -∞, the level of a vanishing cohomology group.
constexpr int kLevelNegInfinity = INT_MIN;

/// Largest |p - q| with p + q = k and h^{p,q} != 0.
inline int hodge_level(const HodgeDiamond& d, int k) {
  if (k < 0 || k > 2 * d.n) throw std::invalid_argument("hodge_level: degree out of range");
  int level = kLevelNegInfinity;
  for (int p = std::max(0, k - d.n); p <= std::min(k, d.n); ++p)
    if (d.at(p, k - p) != 0) level = std::max(level, std::abs(2 * p - k));
  return level;
}

/// p_g = h^{n,0} = 0 and the column h^{0,p} is symmetric about its top index.
inline bool geometric_genus_filter(const HodgeDiamond& d) {
  if (d.at(d.n, 0) != 0) return false;
  int top = 0;
  for (int p = 0; p <= d.n; ++p)
    if (d.at(0, p) != 0) top = p;
  for (int p = 0; p <= top; ++p)
    if (d.at(0, p) != d.at(0, top - p)) return false;
  return true;
}

/// Fourfolds: a positive definite intersection form (signature = b_4) leaves no room
/// for a (3,1)-class, on which the form is negative.
inline bool hodge_riemann_filter(const HodgeDiamond& d) {
  if (d.n != 4) throw std::invalid_argument("hodge_riemann_filter: defined for fourfolds only");
  return !(signature(d) == d.betti()[4] && d.at(3, 1) > 0);
}

/// Smallest degree of positive Hodge level, if any.
inline std::optional<int> first_positive_level(const HodgeDiamond& d) {
  for (int k = 0; k <= 2 * d.n; ++k) {
    const int l = hodge_level(d, k);
    if (l != kLevelNegInfinity && l > 0) return k;
  }
  return std::nullopt;
}

/// Either every level is <= 0 or the first positive one sits in degree k <= (2n-1)/3.
inline bool level_bound_check(const HodgeDiamond& d) {
  auto k = first_positive_level(d);
  return !k || 3 * *k <= 2 * d.n - 1;
}

/// Even fourfold diamonds with the given b_2, b_4, h^{2,0} and vanishing odd rows that are
/// compatible with p_g = 0, Hard Lefschetz on Hodge numbers, and H^4 being spanned by S^2 H^2.
inline std::vector<HodgeDiamond> enumerate_positive_level_diamonds(std::int64_t b2, std::int64_t b4,
                                                                   std::int64_t h20) {
  std::vector<HodgeDiamond> out;
  if (h20 < 1) return out;  // positive level needs h^{2,0} > 0
  const std::int64_t h11 = b2 - 2 * h20;
  if (h11 < 1) return out;
  const std::int64_t h40 = 0;
  for (std::int64_t h31 = h20; h31 <= h20 * h11; ++h31) {
    const std::int64_t h22 = b4 - 2 * h40 - 2 * h31;
    if (h22 < std::max<std::int64_t>(1, h11)) continue;
    if (h22 > h11 * (h11 + 1) / 2 + h20 * h20) continue;
    auto d = HodgeDiamond::fourfold(h20, h11, h40, h31, h22);
    if (!validate_diamond(d).ok() || !geometric_genus_filter(d)) continue;
    out.push_back(d);
  }
  return out;
}

}  // namespace ellk
