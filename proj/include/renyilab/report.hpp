#pragma once

#include <cstdint>
#include <string>

namespace renyilab {

/// Outcome of one numerically checked inequality or identity.
///
/// For an inequality lhs ≤ rhs the slack is rhs − lhs; for an identity it is
/// −|lhs − rhs|. `pass` is decided against the tolerance the check was run with.
struct Report {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = true;
  std::uint64_t instance_seed = 0;
  std::string note;

  /// lhs ≤ rhs + tol. Infinite sides compare in the extended reals.
  static Report at_most(double lhs, double rhs, double tol);
  /// lhs ≥ rhs − tol.
  static Report at_least(double lhs, double rhs, double tol);
  /// |lhs − rhs| ≤ tol; two equal infinities count as equal.
  static Report equal(double lhs, double rhs, double tol);

  Report& with_seed(std::uint64_t seed) {
    instance_seed = seed;
    return *this;
  }
};

/// Combines checks that must all hold; keeps the worst slack and the first failing sides.
Report all_of(const Report& a, const Report& b);

}  // namespace renyilab
