#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellk/sullivan/betti.hpp"

namespace ellk {

/// Hodge numbers h^{p,q}, 0 <= p,q <= n, of a compact Kähler n-fold.
struct HodgeDiamond {
  int n = 0;
  std::vector<std::vector<std::int64_t>> h;

  static HodgeDiamond zero(int n) {
    if (n < 0) throw std::invalid_argument("HodgeDiamond: negative dimension");
    HodgeDiamond d;
    d.n = n;
    d.h.assign(static_cast<std::size_t>(n) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
    return d;
  }

  std::int64_t at(int p, int q) const {
    if (p < 0 || q < 0 || p > n || q > n) return 0;
    return h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  }
  void set(int p, int q, std::int64_t v) { h.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(q)) = v; }

  /// Sets h^{p,q} together with its conjugate and Serre-dual partners.
  void set_symmetric(int p, int q, std::int64_t v) {
    set(p, q, v);
    set(q, p, v);
    set(n - p, n - q, v);
    set(n - q, n - p, v);
  }

  /// Fourfold with vanishing odd rows from the entries on or left of the centre.
  static HodgeDiamond fourfold(std::int64_t h20, std::int64_t h11, std::int64_t h40, std::int64_t h31,
                               std::int64_t h22) {
    HodgeDiamond d = zero(4);
    d.set_symmetric(0, 0, 1);
    d.set_symmetric(2, 0, h20);
    d.set_symmetric(1, 1, h11);
    d.set_symmetric(4, 0, h40);
    d.set_symmetric(3, 1, h31);
    d.set_symmetric(2, 2, h22);
    return d;
  }

  /// Entries h^{p,k-p} of total degree k, p descending.
  std::vector<std::int64_t> row(int k) const {
    std::vector<std::int64_t> out;
    for (int p = std::min(k, n); p >= std::max(0, k - n); --p) out.push_back(at(p, k - p));
    return out;
  }

  BettiVector betti() const {
    BettiVector b;
    for (int k = 0; k <= 2 * n; ++k) {
      std::int64_t s = 0;
      for (auto v : row(k)) s += v;
      b.values.push_back(s);
    }
    return b;
  }

  /// Centred triangular layout, one line per total degree (even degrees only if asked).
  std::string render(bool even_only = false) const {
    std::size_t width = 1;
    for (const auto& r : h)
      for (auto v : r) width = std::max(width, std::to_string(v).size());
    std::size_t cell = width + 1;
    if (cell % 2) ++cell;
    std::size_t widest = 0;
    for (int k = 0; k <= 2 * n; ++k)
      if (!even_only || k % 2 == 0) widest = std::max(widest, row(k).size());
    std::ostringstream os;
    for (int k = 0; k <= 2 * n; ++k) {
      if (even_only && k % 2) continue;
      const auto r = row(k);
      std::string line((widest - r.size()) * cell / 2, ' ');
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::string v = std::to_string(r[i]);
        if (i) line += std::string(cell - width, ' ');
        line += std::string(width - v.size(), ' ') + v;
      }
      os << line << "\n";
    }
    return os.str();
  }

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;
};

struct DiamondReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline DiamondReport validate_diamond(const HodgeDiamond& d) {
  DiamondReport rep;
  const auto sz = static_cast<std::size_t>(d.n) + 1;
  if (d.n < 0 || d.h.size() != sz ||
      std::any_of(d.h.begin(), d.h.end(), [&](const auto& r) { return r.size() != sz; })) {
    rep.violations.push_back("shape: expected a square table of size n+1");
    return rep;
  }
  auto name = [](int p, int q) { return "h^{" + std::to_string(p) + "," + std::to_string(q) + "}"; };
  if (d.at(0, 0) != 1) rep.violations.push_back("normalization: h^{0,0} must be 1");
  if (d.at(d.n, d.n) != 1) rep.violations.push_back("normalization: h^{n,n} must be 1");
  for (int p = 0; p <= d.n; ++p)
    for (int q = 0; q <= d.n; ++q) {
      if (d.at(p, q) < 0) rep.violations.push_back("negative: " + name(p, q));
      if (p < q && d.at(p, q) != d.at(q, p))
        rep.violations.push_back("conjugation: " + name(p, q) + " != " + name(q, p));
      const int sp = d.n - p, sq = d.n - q;
      if (std::pair(p, q) < std::pair(sp, sq) && d.at(p, q) != d.at(sp, sq))
        rep.violations.push_back("serre: " + name(p, q) + " != " + name(sp, sq));
    }
  return rep;
}

/// Level <= 0 diamond with h^{p,p} = b_{2p} from an even, palindromic Betti vector.
inline HodgeDiamond diamond_from_betti(const BettiVector& b, int n) {
  if (!b.odd_vanish()) throw std::invalid_argument("diamond_from_betti: odd Betti numbers must vanish");
  if (b.top_degree() != 2 * n) throw std::invalid_argument("diamond_from_betti: top degree must be 2n");
  if (!b.is_palindromic()) throw std::invalid_argument("diamond_from_betti: Betti vector is not palindromic");
  HodgeDiamond d = HodgeDiamond::zero(n);
  for (int p = 0; p <= n; ++p) d.set(p, p, b[static_cast<std::size_t>(2 * p)]);
  return d;
}

}  // namespace ellk
