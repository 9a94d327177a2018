#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace ellk {

/// Degreewise dimensions b_0..b_N (odd degrees included).
struct BettiVector {
  std::vector<std::int64_t> values;

  /// b_{2i} = evens[i], odd entries zero.
  static BettiVector from_even(const std::vector<std::int64_t>& evens) {
    BettiVector b;
    for (std::size_t i = 0; i < evens.size(); ++i) {
      if (i > 0) b.values.push_back(0);
      b.values.push_back(evens[i]);
    }
    return b;
  }

  std::size_t size() const { return values.size(); }
  std::int64_t operator[](std::size_t k) const { return k < values.size() ? values[k] : 0; }

  std::vector<std::int64_t> even_part() const {
    std::vector<std::int64_t> e;
    for (std::size_t k = 0; k < values.size(); k += 2) e.push_back(values[k]);
    return e;
  }

  bool odd_vanish() const {
    for (std::size_t k = 1; k < values.size(); k += 2)
      if (values[k] != 0) return false;
    return true;
  }

  /// Largest degree with a nonzero entry, -1 for the zero vector.
  int top_degree() const {
    for (std::size_t k = values.size(); k-- > 0;)
      if (values[k] != 0) return static_cast<int>(k);
    return -1;
  }

  /// b_i = b_{m-i} with m the top degree.
  bool is_palindromic() const {
    const int m = top_degree();
    for (int i = 0; i <= m; ++i)
      if ((*this)[static_cast<std::size_t>(i)] != (*this)[static_cast<std::size_t>(m - i)]) return false;
    return true;
  }

  std::int64_t total() const { return std::accumulate(values.begin(), values.end(), std::int64_t{0}); }

  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < values.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * values[k];
    return chi;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < values.size(); ++k) os << (k ? "," : "") << values[k];
    return os.str();
  }

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

}  // namespace ellk
