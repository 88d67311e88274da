#include "renyilab/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace renyilab {

std::string_view to_string(Route route) {
  switch (route) {
    case Route::ClosedForm: return "closed_form";
    case Route::Variational: return "variational";
    case Route::Limit: return "limit";
  }
  return "unknown";
}

namespace {

void require_sandwiched_alpha(double alpha) {
  if (!(alpha >= 0.5) || alpha == 1.0) {
    std::ostringstream os;
    os << "sandwiched order " << alpha << " outside [1/2,1) ∪ (1,∞]";
    throw Error(ErrorCode::BadAlpha, os.str());
  }
}

void require_normalized(const StateFunctional& rho) {
  if (!rho.normalized()) throw Error(ErrorCode::NotNormalized, "ρ must have unit trace");
}

void require_same_dim(const StateFunctional& rho, const StateFunctional& sigma) {
  if (rho.dim() != sigma.dim()) throw Error(ErrorCode::ShapeMismatch, "ρ and σ live on different algebras");
}

// log Σ μᵢ^α with the largest term factored out.
double log_power_sum(const RealVector& mu, double alpha) {
  const double top = mu.size() ? mu.maxCoeff() : 0.0;
  if (!(top > 0.0)) return -kInfinity;
  double acc = 0.0;
  for (Index i = 0; i < mu.size(); ++i) {
    if (mu(i) > 0.0) acc += std::pow(mu(i) / top, alpha);
  }
  return alpha * std::log(top) + std::log(acc);
}

ExtReal from_log_q(double log_q, double alpha) {
  // +∞ stands for an unsupported α > 1; −∞ (Q = 0) only arises for α < 1.
  if (std::isinf(log_q)) return ExtReal::infinity();
  return log_q / (alpha - 1.0);
}

}  // namespace

double log_q_sandwiched(const StateFunctional& rho, const StateFunctional& sigma, double alpha) {
  require_sandwiched_alpha(alpha);
  require_same_dim(rho, sigma);
  if (std::isinf(alpha)) throw Error(ErrorCode::BadAlpha, "Q_α is not defined at α = ∞");
  if (alpha > 1.0 && !supported_on(rho, sigma)) return kInfinity;
  const ComplexMatrix s = real_power(sigma.density(), (1.0 - alpha) / (2.0 * alpha)).matrix();
  const HermitianMatrix inner_op(s * rho.matrix() * s, kInfinity);
  return log_power_sum(psd_spectrum(inner_op), alpha);
}

DivergenceValue sandwiched(const StateFunctional& rho, const StateFunctional& sigma, double alpha) {
  require_sandwiched_alpha(alpha);
  require_normalized(rho);
  if (std::isinf(alpha)) return {alpha, dmax(rho, sigma), Route::ClosedForm};
  return {alpha, from_log_q(log_q_sandwiched(rho, sigma, alpha), alpha), Route::ClosedForm};
}

DivergenceValue sandwiched_via_norm(const StateFunctional& rho, const StateFunctional& sigma, double alpha) {
  require_sandwiched_alpha(alpha);
  require_normalized(rho);
  const double norm = state_norm(rho, sigma, 2.0 * alpha);
  if (std::isinf(norm)) return {alpha, ExtReal::infinity(), Route::ClosedForm};
  if (!(norm > 0.0)) return {alpha, ExtReal::infinity(), Route::ClosedForm};
  const double factor = std::isinf(alpha) ? 2.0 : 2.0 * alpha / (alpha - 1.0);
  return {alpha, factor * std::log(norm), Route::ClosedForm};
}

double log_q_petz(const StateFunctional& rho, const StateFunctional& sigma, double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0) || alpha == 1.0) {
    std::ostringstream os;
    os << "Petz order " << alpha << " outside (0,1) ∪ (1,2]";
    throw Error(ErrorCode::BadAlpha, os.str());
  }
  require_same_dim(rho, sigma);
  if (alpha > 1.0 && !supported_on(rho, sigma)) return kInfinity;
  const ComplexMatrix a = real_power(rho.density(), alpha).matrix();
  const ComplexMatrix b = real_power(sigma.density(), 1.0 - alpha).matrix();
  const double q = (a * b).trace().real();
  return q > 0.0 ? std::log(q) : -kInfinity;
}

DivergenceValue petz(const StateFunctional& rho, const StateFunctional& sigma, double alpha) {
  require_normalized(rho);
  return {alpha, from_log_q(log_q_petz(rho, sigma, alpha), alpha), Route::ClosedForm};
}

ExtReal umegaki(const StateFunctional& rho, const StateFunctional& sigma) {
  require_normalized(rho);
  require_same_dim(rho, sigma);
  if (!supported_on(rho, sigma)) return ExtReal::infinity();
  auto log_fn = [](double x) { return std::log(x); };
  const ComplexMatrix diff = mat_fn(rho.density(), log_fn).matrix() - mat_fn(sigma.density(), log_fn).matrix();
  return (rho.matrix() * diff).trace().real();
}

double fidelity(const StateFunctional& rho, const StateFunctional& sigma) {
  require_same_dim(rho, sigma);
  const ComplexMatrix a = real_power(rho.density(), 0.5).matrix() * real_power(sigma.density(), 0.5).matrix();
  const double t = singular_values(a).sum();
  return t * t;
}

ExtReal dmax(const StateFunctional& rho, const StateFunctional& sigma) {
  require_same_dim(rho, sigma);
  const ExtReal c = dominance_constant(rho, sigma);
  if (c.is_infinite()) return c;
  return std::log(c.value());
}

LimitResult renyi_limit(const StateFunctional& rho, const StateFunctional& sigma, LimitTarget target,
                        const LimitSchedule& schedule) {
  LimitResult out;
  if (target == LimitTarget::Half) {
    out.alphas = {0.5};
    out.value = sandwiched(rho, sigma, 0.5).value;
    out.values = {out.value};
    return out;
  }
  if (target != LimitTarget::OneFromBelow && !supported_on(rho, sigma)) {
    throw Error(ErrorCode::SupportViolation, "limit from above requires ρ ≪ σ");
  }
  if (target == LimitTarget::Infinity) {
    for (double a = 2.0; a < schedule.alpha_max; a *= 2.0) out.alphas.push_back(a);
    out.alphas.push_back(schedule.alpha_max);
    for (double a : out.alphas) out.values.push_back(sandwiched(rho, sigma, a).value);
    for (std::size_t i = 1; i < out.values.size(); ++i) {
      if (out.values[i] < out.values[i - 1] - 1e-12) out.monotone = false;
    }
    if (std::isinf(out.values.back())) {
      out.value = ExtReal::infinity();
      return out;
    }
    // D_α = D_∞ + c/α + O(1/α²): eliminate the 1/α term with the last two orders.
    const std::size_t m = out.values.size();
    const double a1 = out.alphas[m - 2], a2 = out.alphas[m - 1];
    out.value = (a2 * out.values[m - 1] - a1 * out.values[m - 2]) / (a2 - a1);
    return out;
  }

  if (schedule.k_max - schedule.k_min < 2) throw Error(ErrorCode::ConfigError, "schedule needs at least 3 points");
  const double dir = target == LimitTarget::OneFromBelow ? -1.0 : 1.0;
  std::vector<double> f;
  for (int k = schedule.k_min; k <= schedule.k_max; ++k) {
    const double alpha = 1.0 + dir * std::ldexp(1.0, -k);
    out.alphas.push_back(alpha);
    f.push_back(sandwiched(rho, sigma, alpha).value);
  }
  out.values = f;
  if (std::any_of(f.begin(), f.end(), [](double v) { return std::isinf(v); })) {
    out.value = ExtReal::infinity();
    return out;
  }
  for (std::size_t i = 1; i < f.size(); ++i) {
    // Approaching from below the values increase; from above they decrease.
    if (dir * (f[i] - f[i - 1]) > 1e-12) out.monotone = false;
  }
  // Richardson with step halving: first and second order.
  std::vector<double> r1(f.size() - 1), r2(f.size() - 2);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) r1[i] = 2.0 * f[i + 1] - f[i];
  for (std::size_t i = 0; i + 1 < r1.size(); ++i) r2[i] = (4.0 * r1[i + 1] - r1[i]) / 3.0;
  out.value = r2.back();
  return out;
}

AltReport alt_check(const StateFunctional& rho, const StateFunctional& sigma, double p, double tol,
                    double route_tol) {
  if (!(p >= 1.0) || std::isinf(p)) throw Error(ErrorCode::BadExponent, "ALT exponent must be finite and ≥ 1");
  require_same_dim(rho, sigma);
  const double norm = state_norm(rho, sigma, p);
  const double lhs = std::isinf(norm) ? kInfinity : std::pow(norm, p);

  double rhs_trace = kInfinity;
  double rhs_operator = kInfinity;
  if (p <= 2.0 || supported_on(rho, sigma)) {
    const ComplexMatrix a = real_power(rho.density(), p / 2.0).matrix();
    const ComplexMatrix b = real_power(sigma.density(), 1.0 - p / 2.0).matrix();
    rhs_trace = (a * b).trace().real();
    const SpatialDerivative delta = spatial_derivative(rho, sigma);
    rhs_operator = delta.apply_power(p / 4.0, purify(sigma)).reshape_matrix().squaredNorm();
  }

  AltReport rep;
  rep.check = p >= 2.0 ? Report::at_most(lhs, rhs_trace, tol) : Report::at_least(lhs, rhs_trace, tol);
  rep.rhs_operator = rhs_operator;
  rep.route_gap = std::isinf(rhs_trace) && std::isinf(rhs_operator) ? 0.0 : std::abs(rhs_trace - rhs_operator);
  rep.routes_agree = rep.route_gap <= route_tol * std::max(1.0, std::abs(rhs_trace));
  rep.check.pass = rep.check.pass && rep.routes_agree;
  return rep;
}

MonotonicityScan alpha_monotonicity_scan(const StateFunctional& rho, const StateFunctional& sigma,
                                         std::vector<double> alpha_grid, std::vector<double> petz_grid,
                                         double tol) {
  std::sort(alpha_grid.begin(), alpha_grid.end());
  std::sort(petz_grid.begin(), petz_grid.end());
  MonotonicityScan scan;
  scan.alphas = alpha_grid;
  scan.petz_alphas = petz_grid;
  for (double a : alpha_grid) scan.sandwiched_values.push_back(sandwiched(rho, sigma, a).value);
  for (double a : petz_grid) scan.petz_values.push_back(petz(rho, sigma, a).value);
  scan.worst.slack = kInfinity;
  auto sweep = [&](const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
      const Report r = Report::at_most(v[i - 1], v[i], tol);
      if (scan.worst.pass && (!r.pass || r.slack < scan.worst.slack)) scan.worst = r;
    }
  };
  sweep(scan.sandwiched_values);
  sweep(scan.petz_values);
  if (std::isinf(scan.worst.slack)) scan.worst = Report{};
  return scan;
}

}  // namespace renyilab
