#pragma once

#include <limits>

namespace renyilab {

/// Numerical tolerances shared by every module.
///
/// All spectral cutoffs are relative to the operator norm of the matrix they
/// apply to; everything else is absolute.
struct Tolerances {
  double hermiticity = 1e-10;     // ‖A − A†‖_max accepted for a HermitianMatrix
  double support = 1e-10;         // eigenvalues ≤ support·‖A‖_∞ count as zero
  double normalization = 1e-10;   // |Tr D − 1| for a normalized functional
  double unitality = 1e-9;        // ‖Σ K†K − 1‖_max for a channel
  double isometry = 1e-10;        // ‖V†V − 1‖_max for generated isometries
  double test_operator = 1e-10;   // spectrum of a test must lie in [−tol, 1 + tol]
  double reconstruction = 1e-9;   // ‖A − UΛU†‖_max ≤ tol·(1 + ‖A‖_∞)
};

inline constexpr Tolerances kTolerances{};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace renyilab
