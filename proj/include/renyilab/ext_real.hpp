#pragma once

#include <cmath>
#include <ostream>

#include "renyilab/config.hpp"

namespace renyilab {

/// A real number or +∞; used for divergence and norm values.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  constexpr ExtReal(double v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtReal infinity() { return ExtReal(kInfinity); }

  bool is_finite() const { return std::isfinite(v_); }
  bool is_infinite() const { return std::isinf(v_) && v_ > 0; }
  constexpr double value() const { return v_; }
  constexpr operator double() const { return v_; }  // NOLINT

 private:
  double v_ = 0.0;
};

inline std::ostream& operator<<(std::ostream& os, ExtReal x) {
  if (x.is_infinite()) return os << "inf";
  return os << x.value();
}

}  // namespace renyilab
