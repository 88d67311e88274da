#pragma once

#include <optional>

#include "renyilab/ext_real.hpp"
#include "renyilab/matcore.hpp"

namespace renyilab {

/// Positive functional ω(x) = Tr(D_ω x) on the n×n matrix algebra.
class StateFunctional {
 public:
  /// Validates positivity (within `support_tol`) and records whether Tr D = 1.
  explicit StateFunctional(HermitianMatrix density, double support_tol = kTolerances.support);

  static StateFunctional from_matrix(const ComplexMatrix& density);
  static StateFunctional maximally_mixed(Index n);
  static StateFunctional pure(const ComplexVector& psi);

  Index dim() const { return density_.dim(); }
  const HermitianMatrix& density() const { return density_; }
  const ComplexMatrix& matrix() const { return density_.matrix(); }
  bool normalized() const { return normalized_; }
  double trace() const;

  /// Copy rescaled to unit trace. Throws NotPSD for the zero functional.
  StateFunctional normalize() const;

 private:
  HermitianMatrix density_;
  bool normalized_;
};

/// Vector ξ ∈ Cⁿ ⊗ Cᵐ stored through its reshape matrix, ξ = (M ⊗ 1)τ⃗, i.e. ξ_{ij} = M_{ij}.
///
/// The algebra acts on the left leg (x ⊗ 1)ξ ↔ xM, the commutant on the right
/// leg (1 ⊗ y)ξ ↔ M yᵀ. Flattening is row-major.
class VectorState {
 public:
  explicit VectorState(ComplexMatrix m);

  static VectorState from_flat(const ComplexVector& v, Index left_dim, Index right_dim);

  Index left_dim() const { return m_.rows(); }
  Index right_dim() const { return m_.cols(); }
  const ComplexMatrix& reshape_matrix() const { return m_; }
  ComplexVector flat() const;
  double norm() const { return m_.norm(); }

  VectorState operator*(cplx c) const { return VectorState(c * m_); }

 private:
  ComplexMatrix m_;
};

cplx inner(const VectorState& a, const VectorState& b);  // ⟨a|b⟩, antilinear in a

/// Spatial derivative Δ_{ω|σ} on Cⁿ ⊗ Cʳ.
///
/// With σ weighting the algebra (left) leg and ω entering through its
/// commutant functional ω′, Δ_{ω|σ} = D_σ⁻¹ ⊗ D_{ω′}, the inverse taken on the
/// support of D_σ. For the canonical purification of ω this is D_σ⁻¹ ⊗ D_ωᵀ.
struct SpatialDerivative {
  HermitianMatrix base;
  StateFunctional omega_commutant;  // D_{ω′} on the right leg
  StateFunctional sigma;            // weight on the left leg
  SpectralDecomposition spectrum;

  Index left_dim() const { return sigma.dim(); }
  Index right_dim() const { return omega_commutant.dim(); }

  /// Δ^z as an operator on the flattened doubled space (pseudo-power).
  ComplexMatrix power(cplx z) const;
  VectorState apply_power(cplx z, const VectorState& xi) const;
};

VectorState purify(const StateFunctional& rho);
StateFunctional functional_of_vector(const VectorState& xi);
StateFunctional commutant_functional(const VectorState& xi);

bool supported_on(const StateFunctional& rho, const StateFunctional& sigma,
                  double support_tol = kTolerances.support);

/// Least C with ρ ≤ Cσ, or +∞ when ρ is not supported on σ.
ExtReal dominance_constant(const StateFunctional& rho, const StateFunctional& sigma,
                           double support_tol = kTolerances.support);

SpatialDerivative spatial_derivative(const VectorState& omega, const StateFunctional& sigma);
SpatialDerivative spatial_derivative(const StateFunctional& omega, const StateFunctional& sigma);

/// Right-leg factor Bᵀ of R^σ(ξ) = 1 ⊗ Bᵀ with B = D_σ^{-1/2} M, so that
/// R^σ(ξ)(aD_σ^{1/2}) = aM on the support. Shape r×n.
ComplexMatrix relation_operator(const VectorState& xi, const StateFunctional& sigma);

/// 1 ⊗ relation_operator(ξ, σ) acting on flattened vectors of Cⁿ ⊗ Cⁿ.
ComplexMatrix relation_operator_full(const VectorState& xi, const StateFunctional& sigma);

/// Applies (x ⊗ 1) to ξ.
VectorState apply_left(const ComplexMatrix& x, const VectorState& xi);

}  // namespace renyilab
