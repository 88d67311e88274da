#pragma once

#include <vector>

#include "renyilab/divergences.hpp"

namespace renyilab {

/// Largest n·log₂(dim) accepted by tensor_power.
inline constexpr double kTensorLog2Limit = 13.0;

/// ρ^{⊗n}. Throws MemoryGuard when the result would exceed 2¹³ dimensions.
StateFunctional tensor_power(const StateFunctional& rho, int n);

/// Test operator 0 ≤ T ≤ 1.
class TestOperator {
 public:
  explicit TestOperator(HermitianMatrix t, double tol = kTolerances.test_operator);

  /// Skips the spectral check; for operators that are convex combinations of
  /// projectors by construction.
  static TestOperator from_projectors(HermitianMatrix t);

  const HermitianMatrix& op() const { return t_; }
  Index dim() const { return t_.dim(); }
  /// ρ(T) = Tr D_ρ T.
  double expectation(const StateFunctional& rho) const;

 private:
  struct Unchecked {};
  TestOperator(HermitianMatrix t, Unchecked) : t_(std::move(t)) {}

  HermitianMatrix t_;
};

struct TestOutcome {
  TestOperator test;
  double type_one;  // ρ(1 − T)
  double type_two;  // τ(T)
};

/// Projector onto the strictly positive eigenspace of D_ρ − λD_τ.
TestOutcome neyman_pearson_test(const StateFunctional& rho_n, const StateFunctional& tau_n, double lambda);

/// γ·T_a + (1−γ)·T_b for two tests on the same space.
TestOutcome mix_tests(const TestOutcome& a, const TestOutcome& b, double gamma, const StateFunctional& rho_n,
                      const StateFunctional& tau_n);

struct AlphaSearchConfig {
  double alpha_max = 64.0;
  int grid_points = 64;
  int golden_iterations = 80;
};

struct ExponentCurve {
  std::vector<double> r_grid;
  std::vector<double> exponents;
  std::vector<double> alpha_witnesses;  // +∞ when the α → ∞ tail is the best bound
};

/// sup_{α>1} ((α−1)/α)·(r − D_α(ρ‖τ)) for a single r, clamped at 0. `witness`
/// receives the maximizing α (1 when the value is 0).
double strong_converse_exponent(const StateFunctional& rho, const StateFunctional& tau, double r,
                                const AlphaSearchConfig& cfg = {}, double* witness = nullptr);

/// The same bound for every r in the grid. The maximization runs over
/// s = 1 − 1/α ∈ (0, 1 − 1/α_max], where the objective s·r − (1−s)·log Q_{1/(1−s)}
/// is concave; the α → ∞ tail r − D_∞ is compared analytically.
ExponentCurve strong_converse_curve(const StateFunctional& rho, const StateFunctional& tau,
                                    const std::vector<double>& r_grid, const AlphaSearchConfig& cfg = {});

struct BoundChainReport {
  int checks = 0;
  int skipped = 0;          // tests with ρ_n(T) = 0, where the bound is vacuous
  Report worst;             // most violated instance of the finite-n bound
  double additivity_error = 0.0;
  bool pass = true;
};

/// For every Neyman–Pearson test at λ ∈ λ_grid and α ∈ α_grid:
/// D_α(ρ‖τ) ≥ (1/(n(α−1)))·log(ρ_n(T)^α τ_n(T)^{1−α}); also checks
/// D_α(ρ^{⊗n}‖τ^{⊗n}) = n·D_α(ρ‖τ).
BoundChainReport finite_n_bound_check(const StateFunctional& rho, const StateFunctional& tau, int n,
                                      const std::vector<double>& lambda_grid,
                                      const std::vector<double>& alpha_grid, double tol = 1e-8,
                                      double additivity_tol = 1e-7);

struct EmpiricsRow {
  int n = 0;
  double lambda = 0.0;
  double type_one = 0.0;   // ρ_n(1 − T)
  double type_two = 0.0;   // τ_n(T) = e^{−nr} up to rounding
  double exponent = 0.0;   // −(1/n)·log ρ_n(T)
};

/// For each n ≤ n_max, the optimal (randomized) Neyman–Pearson test with
/// τ_n(T) = e^{−nr} and its success exponent.
std::vector<EmpiricsRow> exponent_empirics(const StateFunctional& rho, const StateFunctional& tau, double r,
                                           int n_max);

}  // namespace renyilab
