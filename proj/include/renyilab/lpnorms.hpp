#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "renyilab/random.hpp"
#include "renyilab/report.hpp"
#include "renyilab/states.hpp"

namespace renyilab {

/// Hölder conjugate q with 1/p + 1/q = 1 (1 ↔ ∞).
double conjugate_exponent(double p);

/// σ-weighted L_p-norm ‖ξ‖_{p,σ} = ‖D_σ^{1/p−1/2} M‖_p for p ∈ [1, ∞].
///
/// The weight multiplies M from the left, where the algebra acts. For p ≥ 2 the
/// value is +∞ unless the functional of ξ is supported on σ; for p < 2 the
/// positive power of D_σ already discards the part of ξ outside the support.
ExtReal vector_norm(const VectorState& xi, const StateFunctional& sigma, double p);

/// ‖ρ‖_{p,σ}, the norm of the canonical purification of ρ.
ExtReal state_norm(const StateFunctional& rho, const StateFunctional& sigma, double p);

struct OptimizerConfig {
  int restarts = 8;
  int max_iterations = 20000;
  double tolerance = 1e-14;     // relative change of the objective that counts as converged
  double eigen_floor = 1e-9;    // lower eigenvalue bound of iterates when p < 2
  std::uint64_t seed = 0;
};

struct NormResult {
  ExtReal value = 0.0;
  std::optional<StateFunctional> optimizer_omega;
  std::optional<VectorState> witness;
  int iterations = 0;
  double gap = 0.0;  // |value − closed form|
  bool converged = true;
};

/// F(ω) = Tr(D_ω^{1−2/p} X) with X = D_ρ^{1/2} D_σ^{2/p−1} D_ρ^{1/2}.
double variational_objective(const StateFunctional& omega, const StateFunctional& rho,
                             const StateFunctional& sigma, double p);

/// Norm of ρ as √sup_ω F(ω) (p ≥ 2) or √inf_ω F(ω) (p < 2), computed by
/// alternating between the optimal spectrum of ω in a fixed eigenbasis and
/// sweeps of plane rotations of that basis, with restarts. Runs that do not
/// converge are refined by projected gradient steps over full-rank states.
/// For p < 2 an eigenvalue of the returned ω vanishes only where the
/// corresponding diagonal entry of X does; the value is then the limit of F
/// along full-rank states.
NormResult variational_norm(const StateFunctional& rho, const StateFunctional& sigma, double p,
                            const OptimizerConfig& config = {});

/// Hölder-saturating state ω* = X^{p/2} / Tr X^{p/2}.
StateFunctional closed_form_optimizer(const StateFunctional& rho, const StateFunctional& sigma, double p);

/// |⟨ξ|η⟩| ≤ ‖ξ‖_{p,σ} ‖η‖_{q,σ}.
Report hoelder_check(const VectorState& xi, const VectorState& eta, const StateFunctional& sigma,
                     double p, double tol = 1e-9);

/// sup |⟨ξ|η⟩| over ‖η‖_{q,σ} ≤ 1, by block-coordinate ascent over the
/// singular value decomposition of the weighted dual matrix. The maximizer is
/// returned as `witness`.
NormResult duality_value(const VectorState& xi, const StateFunctional& sigma, double p,
                         const OptimizerConfig& config = {});

/// p_θ with 1/p_θ = (1−θ)/p₀ + θ/p₁.
double interpolated_exponent(double p0, double p1, double theta);

/// ‖ρ‖_{p_θ,σ} ≤ ‖ρ‖_{p₀,σ}^{1−θ} ‖ρ‖_{p₁,σ}^θ with p₀, p₁ on the same side of 2.
Report interpolation_check(const StateFunctional& rho, const StateFunctional& sigma, double p0,
                           double p1, double theta, double tol = 1e-9);

/// Exponents above this value are replaced by it in scans.
inline constexpr double kScanExponentCap = 64.0;

struct ConvexityScan {
  std::vector<double> p;
  std::vector<double> phi;  // p·log‖ρ‖_{p,σ}
  Report worst;             // most violated midpoint inequality
  int midpoints = 0;
};

/// Midpoint convexity of p ↦ p·log‖ρ‖_{p,σ} on [1,2] and on [2,∞), checked
/// over all grid pairs inside each interval.
ConvexityScan log_convexity_scan(const StateFunctional& rho, const StateFunctional& sigma,
                                 std::vector<double> p_grid, double tol = 1e-9);

/// Linear map between doubled spaces Cⁿ⊗Cʳ → Cᵐ⊗Cˢ acting on flattened vectors.
struct LinearMap {
  ComplexMatrix matrix;
  Index in_left, in_right, out_left, out_right;

  static LinearMap identity(Index n, Index r);
  VectorState apply(const VectorState& xi) const;
};

struct SamplerConfig {
  int samples = 200;
  int ascent_rounds = 40;
  int ascent_starts = 4;
  std::uint64_t seed = 0;
};

struct OperatorNormEstimate {
  double lower_bound = 0.0;
  std::optional<VectorState> witness;
  int samples = 0;
  bool exact = false;
};

/// ‖T‖_{p,σ→q,τ}. Exact for (2,2) as the top singular value of the
/// support-restricted map; otherwise a lower bound realized by `witness`.
OperatorNormEstimate weighted_op_norm(const LinearMap& t, const StateFunctional& sigma,
                                      const StateFunctional& tau, double p, double q,
                                      const SamplerConfig& config = {});

/// Ratio ‖Tξ‖_{q,τ} / ‖ξ‖_{p,σ}; zero input norm yields 0.
double op_ratio(const LinearMap& t, const VectorState& xi, const StateFunctional& sigma,
                const StateFunctional& tau, double p, double q);

/// Random vector of the form u·Δ_{ω|σ}^{1/p}σ⃗ with ω random and u a random
/// unitary on the right leg, scaled to unit ‖·‖_{p,σ} where finite.
VectorState lp_sample_vector(const StateFunctional& sigma, Index right_dim, double p, Rng& rng);

struct NormEndpoint {
  double p, q, norm;
};

struct RieszThorinReport {
  double p_theta = 0.0, q_theta = 0.0;
  double bound = 0.0;       // N₀^{1−θ} N₁^θ
  double max_ratio = 0.0;   // largest sampled ‖Tξ‖_{q_θ,τ}/‖ξ‖_{p_θ,σ}
  int samples = 0;
  Report check;
};

/// Samples ratios at the interpolated exponents and compares them with the
/// product of the given endpoint norms. Requires all exponents ≥ 2.
RieszThorinReport riesz_thorin_check(const LinearMap& t, const StateFunctional& sigma,
                                     const StateFunctional& tau, const NormEndpoint& e0,
                                     const NormEndpoint& e1, double theta,
                                     const SamplerConfig& config = {}, double tol = 1e-8);

/// ‖ρ‖_{p,σ} ≥ ‖ρ⃗‖·‖σ⃗‖^{2/p−1} for p ≥ 2, reversed for p ∈ [1,2].
Report norm_estimate_check(const StateFunctional& rho, const StateFunctional& sigma, double p,
                     double tol = 1e-9);

/// ‖Δ_{ω|σ}^{1/2−z} Δ_{ρ|σ}^z σ⃗‖ = ‖Δ_{ρ|ω}^z ω⃗‖ for 0 ≤ Re z ≤ 1/2 and faithful σ.
Report modular_identity_check(const StateFunctional& rho, const StateFunctional& sigma,
                              const StateFunctional& omega, cplx z, double tol = 1e-7);

}  // namespace renyilab
