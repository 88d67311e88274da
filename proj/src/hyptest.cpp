#include "renyilab/hyptest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace renyilab {

StateFunctional tensor_power(const StateFunctional& rho, int n) {
  if (n < 1) throw Error(ErrorCode::BadRank, "tensor power needs n ≥ 1");
  const double size = n * std::log2(static_cast<double>(rho.dim()));
  if (size > kTensorLog2Limit + 1e-12) {
    std::ostringstream os;
    os << "dim^n = 2^" << size << " exceeds the 2^" << kTensorLog2Limit << " limit";
    throw Error(ErrorCode::MemoryGuard, os.str());
  }
  ComplexMatrix out = rho.matrix();
  for (int i = 1; i < n; ++i) out = kron(out, rho.matrix());
  return StateFunctional(HermitianMatrix(out, kInfinity));
}

TestOperator::TestOperator(HermitianMatrix t, double tol) : t_(std::move(t)) {
  const RealVector spec = eig_hermitian(t_).eigenvalues;
  if (spec(0) < -tol || spec(spec.size() - 1) > 1.0 + tol) {
    std::ostringstream os;
    os << "test spectrum [" << spec(0) << ", " << spec(spec.size() - 1) << "] leaves [0,1]";
    throw Error(ErrorCode::NotPSD, os.str());
  }
}

TestOperator TestOperator::from_projectors(HermitianMatrix t) { return TestOperator(std::move(t), Unchecked{}); }

double TestOperator::expectation(const StateFunctional& rho) const {
  if (rho.dim() != dim()) throw Error(ErrorCode::ShapeMismatch, "test and state live on different spaces");
  return rho.matrix().cwiseProduct(t_.matrix().transpose()).sum().real();
}

namespace {

TestOutcome outcome_of(HermitianMatrix t, const StateFunctional& rho_n, const StateFunctional& tau_n) {
  TestOperator test = TestOperator::from_projectors(std::move(t));
  const double success = test.expectation(rho_n);
  const double type_two = test.expectation(tau_n);
  return {std::move(test), rho_n.trace() - success, type_two};
}

}  // namespace

TestOutcome neyman_pearson_test(const StateFunctional& rho_n, const StateFunctional& tau_n, double lambda) {
  if (rho_n.dim() != tau_n.dim()) throw Error(ErrorCode::ShapeMismatch, "hypotheses live on different spaces");
  if (!(lambda >= 0.0)) throw Error(ErrorCode::BadExponent, "λ must be nonnegative");
  const ComplexMatrix diff = rho_n.matrix() - lambda * tau_n.matrix();
  if ((diff - ComplexMatrix(diff.diagonal().asDiagonal())).isZero(0.0)) {
    const RealVector d = diff.diagonal().real();
    const double cutoff = 1e-13 * std::max(1e-300, d.cwiseAbs().maxCoeff());
    const RealVector keep = (d.array() > cutoff).cast<double>();
    return outcome_of(HermitianMatrix(ComplexMatrix(keep.cast<cplx>().asDiagonal()), kInfinity), rho_n, tau_n);
  }
  const SpectralDecomposition eig = eig_hermitian(HermitianMatrix(diff, kInfinity));
  const double cutoff = 1e-13 * std::max(1e-300, eig.operator_norm());
  // Eigenvalues are ascending, so the positive part is a trailing block of columns.
  Index first = eig.eigenvalues.size();
  while (first > 0 && eig.eigenvalues(first - 1) > cutoff) --first;
  const auto cols = eig.eigenvectors.rightCols(eig.eigenvalues.size() - first);
  return outcome_of(HermitianMatrix(cols * cols.adjoint(), kInfinity), rho_n, tau_n);
}

TestOutcome mix_tests(const TestOutcome& a, const TestOutcome& b, double gamma, const StateFunctional& rho_n,
                      const StateFunctional& tau_n) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw Error(ErrorCode::BadExponent, "mixing weight outside [0,1]");
  return outcome_of(gamma * a.test.op() + (1.0 - gamma) * b.test.op(), rho_n, tau_n);
}

namespace {

struct ConverseObjective {
  const StateFunctional& rho;
  const StateFunctional& tau;
  double r;

  // s·r − (1−s)·log Q_α with α = 1/(1−s).
  double operator()(double s) const {
    if (s <= 0.0) return 0.0;
    const double alpha = 1.0 / (1.0 - s);
    return s * r - (1.0 - s) * log_q_sandwiched(rho, tau, alpha);
  }
};

}  // namespace

double strong_converse_exponent(const StateFunctional& rho, const StateFunctional& tau, double r,
                                const AlphaSearchConfig& cfg, double* witness) {
  if (!rho.normalized() || !tau.normalized()) throw Error(ErrorCode::NotNormalized, "ρ and τ must have unit trace");
  if (!(cfg.alpha_max > 1.0) || cfg.grid_points < 2) throw Error(ErrorCode::ConfigError, "bad α search config");
  if (!supported_on(rho, tau)) {
    if (witness) *witness = 1.0;
    return 0.0;
  }
  const ConverseObjective g{rho, tau, r};
  const double s_max = 1.0 - 1.0 / cfg.alpha_max;
  const int n = cfg.grid_points;
  std::vector<double> s(n + 1), v(n + 1);
  int best = 0;
  for (int i = 0; i <= n; ++i) {
    s[i] = s_max * static_cast<double>(i) / n;
    v[i] = g(s[i]);
    if (v[i] > v[best]) best = i;
  }
  double lo = s[std::max(0, best - 1)], hi = s[std::min(n, best + 1)];
  double s_best = s[best], v_best = v[best];
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = g(x1), f2 = g(x2);
  for (int it = 0; it < cfg.golden_iterations && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = g(x1);
    }
  }
  for (auto [x, f] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
    if (f > v_best) {
      v_best = f;
      s_best = x;
    }
  }
  double alpha_best = s_best > 0.0 ? 1.0 / (1.0 - s_best) : 1.0;
  const double tail = r - static_cast<double>(dmax(rho, tau));
  if (tail > v_best) {
    v_best = tail;
    alpha_best = kInfinity;
  }
  if (!(v_best > 0.0)) {
    v_best = 0.0;
    alpha_best = 1.0;
  }
  if (witness) *witness = alpha_best;
  return v_best;
}

ExponentCurve strong_converse_curve(const StateFunctional& rho, const StateFunctional& tau,
                                    const std::vector<double>& r_grid, const AlphaSearchConfig& cfg) {
  ExponentCurve curve;
  curve.r_grid = r_grid;
  for (double r : r_grid) {
    double witness = 1.0;
    curve.exponents.push_back(strong_converse_exponent(rho, tau, r, cfg, &witness));
    curve.alpha_witnesses.push_back(witness);
  }
  return curve;
}

BoundChainReport finite_n_bound_check(const StateFunctional& rho, const StateFunctional& tau, int n,
                                      const std::vector<double>& lambda_grid,
                                      const std::vector<double>& alpha_grid, double tol, double additivity_tol) {
  const StateFunctional rho_n = tensor_power(rho, n);
  const StateFunctional tau_n = tensor_power(tau, n);
  BoundChainReport rep;
  rep.worst.slack = kInfinity;

  // The joint value is evaluated without a spectral cutoff: support is decided
  // on one copy, and with ρ = RR† the nonzero spectrum of s ρ^{⊗n} s is that of
  // R_n† s² R_n, R_n = R^{⊗n}. Thresholding instead would drop genuine
  // eigenvalues of order λ_min^n, which still count for α < 1.
  const SpectralDecomposition rho_eig = eig_hermitian(rho.density());
  const double rho_cut = kTolerances.support * std::max(1e-300, rho_eig.operator_norm());
  std::vector<Index> kept;
  for (Index i = 0; i < rho_eig.eigenvalues.size(); ++i) {
    if (rho_eig.eigenvalues(i) > rho_cut) kept.push_back(i);
  }
  ComplexMatrix r1(rho.dim(), static_cast<Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) {
    r1.col(static_cast<Index>(k)) = rho_eig.eigenvectors.col(kept[k]) * std::sqrt(rho_eig.eigenvalues(kept[k]));
  }
  ComplexMatrix r_n = r1;
  for (int i = 1; i < n; ++i) r_n = kron(r_n, r1);

  std::vector<double> d_alpha;
  for (double alpha : alpha_grid) {
    const double single = sandwiched(rho, tau, alpha).value;
    d_alpha.push_back(single);
    if (std::isinf(single) || std::isinf(alpha)) continue;
    const ComplexMatrix s1 = real_power(tau.density(), (1.0 - alpha) / alpha).matrix();
    ComplexMatrix s = s1;
    for (int i = 1; i < n; ++i) s = kron(s, s1);
    const RealVector mu = eig_hermitian(HermitianMatrix(r_n.adjoint() * s * r_n, kInfinity)).eigenvalues;
    const double top = mu.maxCoeff();
    double acc = 0.0;
    for (Index i = 0; i < mu.size(); ++i) {
      if (mu(i) > 0.0) acc += std::pow(mu(i) / top, alpha);
    }
    const double joint = (alpha * std::log(top) + std::log(acc)) / (alpha - 1.0);
    rep.additivity_error = std::max(rep.additivity_error, std::abs(joint - n * single));
  }

  for (double lambda : lambda_grid) {
    const TestOutcome t = neyman_pearson_test(rho_n, tau_n, lambda);
    const double success = 1.0 - t.type_one;
    if (success < 1e-12) {
      rep.skipped += static_cast<int>(alpha_grid.size());
      continue;
    }
    for (std::size_t j = 0; j < alpha_grid.size(); ++j) {
      const double alpha = alpha_grid[j];
      if (!(alpha > 1.0)) continue;
      const double log_two = t.type_two > 0.0 ? std::log(t.type_two) : -kInfinity;
      const double rhs = std::isinf(log_two)
                             ? kInfinity
                             : (alpha * std::log(success) + (1.0 - alpha) * log_two) / (n * (alpha - 1.0));
      Report r = Report::at_least(d_alpha[j], rhs, tol);
      ++rep.checks;
      if (rep.worst.pass && (!r.pass || r.slack < rep.worst.slack)) rep.worst = r;
    }
  }
  if (rep.checks == 0) rep.worst = Report{};
  rep.pass = rep.worst.pass && rep.additivity_error <= additivity_tol;
  return rep;
}

std::vector<EmpiricsRow> exponent_empirics(const StateFunctional& rho, const StateFunctional& tau, double r,
                                           int n_max) {
  if (!(r >= 0.0)) throw Error(ErrorCode::BadExponent, "rate must be nonnegative");
  std::vector<EmpiricsRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const StateFunctional rho_n = tensor_power(rho, n);
    const StateFunctional tau_n = tensor_power(tau, n);
    const double target = std::exp(-n * r);
    auto test_at = [&](double lambda) { return neyman_pearson_test(rho_n, tau_n, lambda); };

    TestOutcome low = test_at(0.0);
    EmpiricsRow row;
    row.n = n;
    if (low.type_two <= target) {
      row.lambda = 0.0;
      row.type_one = low.type_one;
      row.type_two = low.type_two;
    } else {
      double lo = 0.0, hi = 1.0;
      TestOutcome high = test_at(hi);
      for (int k = 0; k < 2000 && high.type_two > target; ++k) {
        lo = hi;
        low = std::move(high);
        hi *= 2.0;
        high = test_at(hi);
      }
      for (int k = 0; k < 200 && hi - lo > 1e-15 * hi; ++k) {
        const double mid = lo == 0.0 ? 0.5 * hi : std::sqrt(lo * hi);
        TestOutcome t = test_at(mid);
        if (t.type_two > target) {
          lo = mid;
          low = std::move(t);
        } else {
          hi = mid;
          high = std::move(t);
        }
      }
      const double span = low.type_two - high.type_two;
      const double gamma = span > 0.0 ? std::clamp((target - high.type_two) / span, 0.0, 1.0) : 0.0;
      const TestOutcome mixed = mix_tests(low, high, gamma, rho_n, tau_n);
      row.lambda = hi;
      row.type_one = mixed.type_one;
      row.type_two = mixed.type_two;
    }
    const double success = 1.0 - row.type_one;
    row.exponent = success > 0.0 ? -std::log(success) / n : kInfinity;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace renyilab
