#pragma once

#include <vector>

#include "renyilab/divergences.hpp"
#include "renyilab/random.hpp"

namespace renyilab {

/// Completely positive unital map ℰ: M_m → M_n given by Kraus operators K_i (m×n).
///
/// The pre-dual is ℰ_*(ρ) = Σ K_i ρ K_i† and the map itself ℰ(a) = Σ K_i† a K_i.
/// Unitality Σ K_i† K_i = 1_n is checked on construction; exactly zero Kraus
/// operators are allowed.
class Channel {
 public:
  explicit Channel(std::vector<ComplexMatrix> kraus, double tol = kTolerances.unitality);

  static Channel identity(Index n);
  static Channel unitary(const ComplexMatrix& u);
  /// Completely depolarizing channel with Kraus operators |i⟩⟨j|/√d.
  static Channel depolarizing(Index d);
  /// Two-outcome measurement of the effect T, ℰ_*(ρ) = diag(ρ(T), ρ(1−T)).
  static Channel measurement(const HermitianMatrix& t);
  /// Random channel with `kraus_count` operators from a Haar-like isometry.
  static Channel random(Index in_dim, Index out_dim, Index kraus_count, Rng& rng);

  Index in_dim() const { return kraus_.front().cols(); }
  Index out_dim() const { return kraus_.front().rows(); }
  Index kraus_count() const { return static_cast<Index>(kraus_.size()); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  /// Copy with `extra` zero Kraus operators appended.
  Channel padded(Index extra) const;

 private:
  std::vector<ComplexMatrix> kraus_;
};

StateFunctional apply_predual(const Channel& ch, const StateFunctional& rho);
ComplexMatrix apply_heisenberg(const Channel& ch, const ComplexMatrix& a);

/// Isometry V: Cⁿ → Cᵐ ⊗ Cᵏ with V = Σ_i K_i ⊗ e_i, i.e. V[(a·k + i), b] = K_i[a, b].
struct StinespringDilation {
  ComplexMatrix isometry;  // (m·k) × n
  Index out_dim = 0;
  Index env_dim = 0;

  Index in_dim() const { return isometry.cols(); }
};

StinespringDilation stinespring(const Channel& ch);

/// Channel recovered from a dilation by splitting V into its environment blocks.
Channel channel_from_dilation(const StinespringDilation& dil);

/// (V ⊗ 1)ξ for ξ ∈ Cⁿ ⊗ Cʳ, re-bracketed as Cᵐ ⊗ (Cᵏ ⊗ Cʳ): the algebra
/// leg is the channel output and the environment joins the commutant side.
VectorState embed_vector(const StinespringDilation& dil, const VectorState& xi);

/// The map ξ ↦ (V ⊗ 1)ξ on flattened vectors with right dimension r.
LinearMap dilation_map(const StinespringDilation& dil, Index right_dim);

/// Exact ‖V ⊗ 1‖_{∞,σ→∞,τ} = √C where C is the least constant with ℰ_*(σ) ≤ Cτ.
double dilation_sup_norm(const Channel& ch, const StateFunctional& sigma, const StateFunctional& tau);

struct DpiReport {
  Report divergence;  // D_α(ρ‖σ) ≥ D_α(ℰ_*ρ‖ℰ_*σ)
  Report relative_entropy;
  Report fidelity;    // F(ℰ_*ρ, ℰ_*σ) ≥ F(ρ, σ)
  bool pass = true;
};

/// Data processing for states at order α ∈ [1/2,1) ∪ (1,∞], plus the
/// relative entropy and fidelity.
DpiReport dpi_check_states(const Channel& ch, const StateFunctional& rho, const StateFunctional& sigma,
                           double alpha, double tol = 1e-8);

/// ‖(V⊗1)ξ‖_{p,ℰ_*(σ)} ≤ ‖ξ‖_{p,σ} for p ≥ 2, reversed for p ∈ [1,2].
Report dpi_check_vectors(const Channel& ch, const VectorState& xi, const StateFunctional& sigma, double p,
                         double tol = 1e-8);

}  // namespace renyilab
