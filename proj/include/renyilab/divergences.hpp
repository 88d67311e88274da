#pragma once

#include <string_view>
#include <vector>

#include "renyilab/lpnorms.hpp"

namespace renyilab {

enum class Route { ClosedForm, Variational, Limit };

std::string_view to_string(Route route);

/// A divergence value in nats together with its order and how it was obtained.
struct DivergenceValue {
  double alpha = 0.0;
  ExtReal value = 0.0;
  Route route = Route::ClosedForm;
};

/// log Q_α(ρ‖σ) = log Tr(σ^{(1−α)/2α} ρ σ^{(1−α)/2α})^α, evaluated in log space.
/// +∞ for α > 1 when ρ is not supported on σ; −∞ when Q_α = 0.
double log_q_sandwiched(const StateFunctional& rho, const StateFunctional& sigma, double alpha);

/// Sandwiched divergence D_α for α ∈ [1/2, 1) ∪ (1, ∞]; α = ∞ gives dmax.
DivergenceValue sandwiched(const StateFunctional& rho, const StateFunctional& sigma, double alpha);

/// Same value through the norm, (2α/(α−1))·log ‖ρ‖_{2α,σ}.
DivergenceValue sandwiched_via_norm(const StateFunctional& rho, const StateFunctional& sigma, double alpha);

/// log Q̄_α = log Tr D_ρ^α D_σ^{1−α}.
double log_q_petz(const StateFunctional& rho, const StateFunctional& sigma, double alpha);

/// Petz divergence for α ∈ (0,1) ∪ (1,2].
DivergenceValue petz(const StateFunctional& rho, const StateFunctional& sigma, double alpha);

/// Tr D_ρ(log D_ρ − log D_σ); +∞ unless ρ ≪ σ.
ExtReal umegaki(const StateFunctional& rho, const StateFunctional& sigma);

/// ‖√D_ρ √D_σ‖₁².
double fidelity(const StateFunctional& rho, const StateFunctional& sigma);

/// log of the least C with ρ ≤ Cσ.
ExtReal dmax(const StateFunctional& rho, const StateFunctional& sigma);

enum class LimitTarget { Half, OneFromBelow, OneFromAbove, Infinity };

struct LimitSchedule {
  int k_min = 3;   // α = 1 ± 2^{-k}, k = k_min..k_max
  int k_max = 12;
  double alpha_max = 1000.0;
};

struct LimitResult {
  ExtReal value = 0.0;
  std::vector<double> alphas;
  std::vector<double> values;
  bool monotone = true;  // along the schedule, in the direction of approach
};

/// Limit of α ↦ D_α. Near α = 1 the values on the schedule are combined by
/// second-order Richardson extrapolation. The infinity target runs a doubling
/// schedule up to α_max and removes the 1/α term using the last two orders.
LimitResult renyi_limit(const StateFunctional& rho, const StateFunctional& sigma, LimitTarget target,
                        const LimitSchedule& schedule = {});

struct AltReport {
  Report check;          // Q_α against Q̄_α in the direction fixed by p
  double rhs_operator;   // ‖Δ_{ρ|σ}^{p/4} σ⃗‖²
  double route_gap;      // |trace route − operator route|
  bool routes_agree;     // route_gap ≤ route_tol·max(1, |trace route|)
};

/// ‖ρ‖_{p,σ}^p ≤ Tr D_ρ^{p/2} D_σ^{1−p/2} for p ≥ 2, reversed for p ∈ [1,2].
AltReport alt_check(const StateFunctional& rho, const StateFunctional& sigma, double p, double tol = 1e-9,
                    double route_tol = 1e-8);

struct MonotonicityScan {
  std::vector<double> alphas;
  std::vector<double> sandwiched_values;
  std::vector<double> petz_alphas;
  std::vector<double> petz_values;
  Report worst;
};

/// Nondecreasing D_α over `alpha_grid` and Petz D̄_α over `petz_grid`.
MonotonicityScan alpha_monotonicity_scan(const StateFunctional& rho, const StateFunctional& sigma,
                                         std::vector<double> alpha_grid,
                                         std::vector<double> petz_grid = {0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.3,
                                                                          1.5, 1.7, 1.9},
                                         double tol = 1e-9);

}  // namespace renyilab
