#include "renyilab/report.hpp"

#include <cmath>

namespace renyilab {

Report Report::at_most(double lhs, double rhs, double tol) {
  Report r;
  r.lhs = lhs;
  r.rhs = rhs;
  if (lhs == rhs) {
    r.slack = 0.0;
  } else if (std::isinf(rhs) && rhs > 0) {
    r.slack = rhs;
  } else {
    r.slack = rhs - lhs;
    r.pass = !std::isnan(r.slack) && r.slack >= -tol;
  }
  return r;
}

Report Report::at_least(double lhs, double rhs, double tol) {
  Report r = at_most(rhs, lhs, tol);
  std::swap(r.lhs, r.rhs);
  return r;
}

Report Report::equal(double lhs, double rhs, double tol) {
  Report r;
  r.lhs = lhs;
  r.rhs = rhs;
  if (std::isinf(lhs) || std::isinf(rhs)) {
    r.pass = lhs == rhs;
    r.slack = r.pass ? 0.0 : -HUGE_VAL;
  } else {
    r.slack = -std::abs(lhs - rhs);
    r.pass = !std::isnan(r.slack) && r.slack >= -tol;
  }
  return r;
}

Report all_of(const Report& a, const Report& b) {
  if (!a.pass) return a;
  if (!b.pass) return b;
  return a.slack <= b.slack ? a : b;
}

}  // namespace renyilab
