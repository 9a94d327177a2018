#pragma once

#include <ostream>
#include <string>

#include "ellk/exactalg/rational.hpp"

namespace ellk::detail {

/// Appends `c*factors` to a sum being printed; `factors` empty means the unit monomial.
inline void append_term(std::ostream& os, bool first, const Rational& c, const std::string& factors) {
  const Rational mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (factors.empty()) {
    os << mag.get_str();
    return;
  }
  if (mag != 1) os << mag.get_str() << "*";
  os << factors;
}

}  // namespace ellk::detail
