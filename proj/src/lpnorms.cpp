#include "renyilab/lpnorms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace renyilab {

namespace {

void require_exponent(double p) {
  if (!(p >= 1.0)) {
    std::ostringstream os;
    os << "exponent " << p << " < 1";
    throw Error(ErrorCode::BadExponent, os.str());
  }
}

double inverse(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

// D_σ^{1/p−1/2}; the pseudo-power at exponent 0 is the support projector.
ComplexMatrix weight(const StateFunctional& sigma, double p) {
  return real_power(sigma.density(), inverse(p) - 0.5).matrix();
}

// X = D_ρ^{1/2} D_σ^{2/p−1} D_ρ^{1/2}
HermitianMatrix objective_kernel(const StateFunctional& rho, const StateFunctional& sigma, double p) {
  const ComplexMatrix r = real_power(rho.density(), 0.5).matrix();
  const ComplexMatrix s = real_power(sigma.density(), 2.0 * inverse(p) - 1.0).matrix();
  return HermitianMatrix(r * s * r, kInfinity);
}

// Euclidean projection of v onto {x ≥ floor, Σx = 1}.
RealVector project_simplex(const RealVector& v, double floor) {
  const Index n = v.size();
  const double total = 1.0 - static_cast<double>(n) * floor;
  RealVector u = v.array() - floor;
  std::vector<double> sorted(u.data(), u.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (Index j = 0; j < n; ++j) {
    cumulative += sorted[j];
    const double candidate = (cumulative - total) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) theta = candidate;
  }
  return (u.array() - theta).max(0.0) + floor;
}

struct Iterate {
  RealVector w;
  ComplexMatrix u;
  double value = 0.0;
};

class SpectralObjective {
 public:
  SpectralObjective(const HermitianMatrix& x, double exponent) : x_(x.matrix()), a_(exponent) {}

  double f(double lambda) const { return lambda > 0.0 ? std::pow(lambda, a_) : 0.0; }

  double df(double lambda) const {
    constexpr double kClamp = 1e-12;
    return a_ * std::pow(std::max(lambda, kClamp), a_ - 1.0);
  }

  Iterate at(const ComplexMatrix& omega) const {
    const SpectralDecomposition eig = eig_hermitian(HermitianMatrix(omega, kInfinity));
    return at(eig.eigenvalues, eig.eigenvectors);
  }

  Iterate at(const RealVector& w, const ComplexMatrix& u) const {
    const ComplexMatrix xt = u.adjoint() * x_ * u;
    double value = 0.0;
    for (Index i = 0; i < w.size(); ++i) value += f(w(i)) * xt(i, i).real();
    return {w, u, value};
  }

  // Fréchet gradient of ω ↦ Tr f(ω)X via first divided differences of f.
  ComplexMatrix gradient(const Iterate& it) const {
    const Index n = it.w.size();
    const ComplexMatrix xt = it.u.adjoint() * x_ * it.u;
    ComplexMatrix g(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        const double li = it.w(i), lj = it.w(j);
        const double d = std::abs(li - lj) <= 1e-12 * std::max(1.0, li) ? df(li) : (f(li) - f(lj)) / (li - lj);
        g(i, j) = d * xt(i, j);
      }
    }
    return it.u * g * it.u.adjoint();
  }

 private:
  ComplexMatrix x_;
  double a_;
};

struct LocalResult {
  Iterate best;
  int iterations = 0;
  bool converged = false;
};

LocalResult projected_gradient(const SpectralObjective& obj, const ComplexMatrix& start, double sign,
                               double floor, const OptimizerConfig& cfg) {
  auto project = [floor](const ComplexMatrix& y) {
    const SpectralDecomposition eig = eig_hermitian(HermitianMatrix(0.5 * (y + y.adjoint()), kInfinity));
    return std::make_pair(project_simplex(eig.eigenvalues, floor), eig.eigenvectors);
  };
  auto [w0, u0] = project(start);
  LocalResult out{obj.at(w0, u0), 0, false};
  double step = 1.0;
  int quiet = 0;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    out.iterations = it + 1;
    const ComplexMatrix omega = out.best.u * out.best.w.cast<cplx>().asDiagonal() * out.best.u.adjoint();
    const ComplexMatrix g = obj.gradient(out.best);
    bool accepted = false;
    Iterate next;
    while (step > 1e-18) {
      auto [w, u] = project(omega + sign * step * g);
      next = obj.at(w, u);
      if (sign * (next.value - out.best.value) >= 0.0) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      out.converged = true;
      break;
    }
    const double change = std::abs(next.value - out.best.value);
    out.best = std::move(next);
    step *= 1.5;
    quiet = change <= cfg.tolerance * std::max(1.0, std::abs(out.best.value)) ? quiet + 1 : 0;
    if (quiet >= 3) {
      out.converged = true;
      break;
    }
  }
  return out;
}

// Block-coordinate search: maximizes F for p > 2 (sign +1) and minimizes it
// for p < 2 (sign −1). The eigenvalues of ω are set to their best values in the
// current eigenbasis, and the basis is improved by sweeps of pairwise plane
// rotations, each one optimal over the rotations of its plane.
LocalResult rotation_search(const HermitianMatrix& x, double a, double sign, const ComplexMatrix& start,
                            const OptimizerConfig& cfg) {
  const Index n = x.dim();
  const SpectralObjective obj(x, a);
  ComplexMatrix u = eig_hermitian(HermitianMatrix(start, kInfinity)).eigenvectors;

  auto best_weights = [&](const ComplexMatrix& basis) {
    const ComplexMatrix y = basis.adjoint() * x.matrix() * basis;
    RealVector w = RealVector::Zero(n);
    if (a >= 1.0) {
      Index arg = 0;
      y.diagonal().real().maxCoeff(&arg);
      w(arg) = 1.0;
      return w;
    }
    for (Index i = 0; i < n; ++i) w(i) = std::pow(std::max(0.0, y(i, i).real()), 1.0 / (1.0 - a));
    const double total = w.sum();
    if (total > 0.0) {
      w /= total;
    } else {
      w.setConstant(1.0 / static_cast<double>(n));
    }
    return w;
  };

  LocalResult out{obj.at(best_weights(u), u), 0, false};
  int quiet = 0;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    out.iterations = it + 1;
    const RealVector& w = out.best.w;
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        const ComplexMatrix y = u.adjoint() * x.matrix() * u;
        ComplexMatrix block(2, 2);
        block << y(i, i), y(i, j), y(j, i), y(j, j);
        const SpectralDecomposition e = eig_hermitian(HermitianMatrix(block, kInfinity));
        // In both regimes the larger weight gets the larger diagonal entry of the
        // rotated block.
        ComplexMatrix r(2, 2);
        if (w(i) >= w(j)) {
          r << e.eigenvectors(0, 1), e.eigenvectors(0, 0), e.eigenvectors(1, 1), e.eigenvectors(1, 0);
        } else {
          r = e.eigenvectors;
        }
        ComplexMatrix cols(n, 2);
        cols << u.col(i), u.col(j);
        cols = cols * r;
        u.col(i) = cols.col(0);
        u.col(j) = cols.col(1);
      }
    }
    Iterate next = obj.at(best_weights(u), u);
    const double change = sign * (next.value - out.best.value);
    if (change >= 0.0) out.best = std::move(next);
    quiet = change <= cfg.tolerance * std::max(1.0, std::abs(out.best.value)) ? quiet + 1 : 0;
    if (quiet >= 2) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace

double conjugate_exponent(double p) {
  require_exponent(p);
  if (p == 1.0) return kInfinity;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

ExtReal vector_norm(const VectorState& xi, const StateFunctional& sigma, double p) {
  require_exponent(p);
  if (xi.left_dim() != sigma.dim()) throw Error(ErrorCode::ShapeMismatch, "ξ and σ live on different algebras");
  if (p >= 2.0 && !supported_on(functional_of_vector(xi), sigma)) return ExtReal::infinity();
  return schatten_norm(weight(sigma, p) * xi.reshape_matrix(), p);
}

ExtReal state_norm(const StateFunctional& rho, const StateFunctional& sigma, double p) {
  return vector_norm(purify(rho), sigma, p);
}

double variational_objective(const StateFunctional& omega, const StateFunctional& rho,
                             const StateFunctional& sigma, double p) {
  require_exponent(p);
  const HermitianMatrix x = objective_kernel(rho, sigma, p);
  if (p == 2.0) return x.matrix().trace().real();
  const double a = 1.0 - 2.0 * inverse(p);
  return (mat_power(omega.density(), a) * x.matrix()).trace().real();
}

StateFunctional closed_form_optimizer(const StateFunctional& rho, const StateFunctional& sigma, double p) {
  require_exponent(p);
  const HermitianMatrix x = objective_kernel(rho, sigma, p);
  if (std::isinf(p)) {
    const SpectralDecomposition eig = eig_hermitian(x);
    const double top = eig.eigenvalues.maxCoeff();
    ComplexMatrix proj = ComplexMatrix::Zero(x.dim(), x.dim());
    for (Index i = 0; i < x.dim(); ++i) {
      if (eig.eigenvalues(i) >= top * (1.0 - 1e-9)) proj += eig.eigenvectors.col(i) * eig.eigenvectors.col(i).adjoint();
    }
    return StateFunctional(HermitianMatrix(proj, kInfinity)).normalize();
  }
  return StateFunctional(real_power(x, p / 2.0)).normalize();
}

NormResult variational_norm(const StateFunctional& rho, const StateFunctional& sigma, double p,
                            const OptimizerConfig& config) {
  require_exponent(p);
  if (rho.dim() != sigma.dim()) throw Error(ErrorCode::ShapeMismatch, "ρ and σ live on different algebras");
  const ExtReal closed = state_norm(rho, sigma, p);
  NormResult res;
  if (closed.is_infinite()) {
    res.value = ExtReal::infinity();
    return res;
  }
  const Index n = rho.dim();
  const HermitianMatrix x = objective_kernel(rho, sigma, p);
  if (p == 2.0) {
    res.value = std::sqrt(std::max(0.0, x.matrix().trace().real()));
    res.optimizer_omega = StateFunctional::maximally_mixed(n);
    res.gap = std::abs(res.value - closed);
    return res;
  }

  const double a = 1.0 - 2.0 * inverse(p);
  const double sign = p > 2.0 ? 1.0 : -1.0;
  const double floor = config.eigen_floor;
  const SpectralObjective obj(x, a);

  std::optional<LocalResult> best;
  int total_iterations = 0;
  bool all_converged = true;
  for (int r = 0; r < std::max(1, config.restarts); ++r) {
    const ComplexMatrix start = r == 0 ? ComplexMatrix(StateFunctional::maximally_mixed(n).matrix())
                                       : random_density(n, n, mix_seed(config.seed, r)).matrix();
    LocalResult local = rotation_search(x, a, sign, start, config);
    if (!local.converged) {
      const ComplexMatrix from = local.best.u * local.best.w.cast<cplx>().asDiagonal() * local.best.u.adjoint();
      LocalResult refined = projected_gradient(obj, from, sign, floor, config);
      refined.iterations += local.iterations;
      if (sign * (refined.best.value - local.best.value) > 0.0) local = std::move(refined);
    }
    total_iterations += local.iterations;
    all_converged = all_converged && local.converged;
    if (!best || sign * (local.best.value - best->best.value) > 0.0) best = std::move(local);
  }

  const Iterate& it = best->best;
  res.value = std::sqrt(std::max(0.0, it.value));
  res.optimizer_omega =
      StateFunctional(HermitianMatrix(it.u * it.w.cast<cplx>().asDiagonal() * it.u.adjoint(), kInfinity));
  res.iterations = total_iterations;
  res.converged = all_converged;
  res.gap = std::abs(res.value - closed);
  return res;
}

Report hoelder_check(const VectorState& xi, const VectorState& eta, const StateFunctional& sigma, double p,
                     double tol) {
  const double q = conjugate_exponent(p);
  const double lhs = std::abs(inner(xi, eta));
  const double a = vector_norm(xi, sigma, p);
  const double b = vector_norm(eta, sigma, q);
  // 0·∞ is read as ∞: an infinite factor gives no constraint.
  const double rhs = (std::isinf(a) || std::isinf(b)) ? kInfinity : a * b;
  return Report::at_most(lhs, rhs, tol);
}

NormResult duality_value(const VectorState& xi, const StateFunctional& sigma, double p,
                         const OptimizerConfig& config) {
  const double q = conjugate_exponent(p);
  const ExtReal closed = vector_norm(xi, sigma, p);
  NormResult res;
  if (closed.is_infinite()) {
    res.value = ExtReal::infinity();
    return res;
  }
  const ComplexMatrix a = weight(sigma, p) * xi.reshape_matrix();
  const ComplexMatrix lift = real_power(sigma.density(), 0.5 - inverse(q)).matrix();
  const Index n = a.rows(), m = a.cols(), k = std::min(n, m);

  auto update_weights = [&](const RealVector& c) {
    RealVector s = RealVector::Zero(k);
    if (std::isinf(q)) {
      s.setOnes();
    } else if (q == 1.0) {
      Index arg = 0;
      c.maxCoeff(&arg);
      s(arg) = 1.0;
    } else {
      for (Index i = 0; i < k; ++i) s(i) = c(i) > 0.0 ? std::pow(c(i), p - 1.0) : 0.0;
      double norm = 0.0;
      for (Index i = 0; i < k; ++i) norm += std::pow(s(i), q);
      if (norm > 0.0) {
        s /= std::pow(norm, 1.0 / q);
      } else {
        s.setConstant(std::pow(static_cast<double>(k), -1.0 / q));
      }
    }
    return s;
  };

  Rng rng(mix_seed(config.seed, 0xD0A1));
  double best_value = -1.0;
  ComplexMatrix best_b;
  int total_iterations = 0;
  bool all_converged = true;
  for (int r = 0; r < std::max(1, config.restarts); ++r) {
    ComplexMatrix u = random_isometry(k, n, rng);
    ComplexMatrix v = random_isometry(k, m, rng);
    RealVector s = update_weights(RealVector::Ones(k));
    double value = -1.0;
    bool converged = false;
    int it = 0;
    for (; it < config.max_iterations; ++it) {
      const auto sd = s.cast<cplx>().asDiagonal();
      u = polar_unitary(a * v * sd);
      v = polar_unitary(a.adjoint() * u * sd);
      const ComplexMatrix core = u.adjoint() * a * v;
      RealVector c(k);
      for (Index i = 0; i < k; ++i) c(i) = core(i, i).real();
      s = update_weights(c);
      const double next = s.dot(c);
      if (it > 2 && next - value <= 1e-15 * std::max(1.0, std::abs(next))) {
        value = std::max(value, next);
        converged = true;
        break;
      }
      value = next;
    }
    total_iterations += it + 1;
    all_converged = all_converged && converged;
    if (value > best_value) {
      best_value = value;
      best_b = u * s.cast<cplx>().asDiagonal() * v.adjoint();
    }
  }

  VectorState eta(lift * best_b);
  res.value = std::abs(inner(xi, eta));
  res.witness = eta;
  res.iterations = total_iterations;
  res.converged = all_converged;
  res.gap = std::abs(res.value - closed);
  return res;
}

double interpolated_exponent(double p0, double p1, double theta) {
  const double inv = (1.0 - theta) * inverse(p0) + theta * inverse(p1);
  return inv == 0.0 ? kInfinity : 1.0 / inv;
}

namespace {

double geometric_mix(double a, double b, double theta) {
  if (theta == 0.0) return a;
  if (theta == 1.0) return b;
  if (std::isinf(a) || std::isinf(b)) return kInfinity;
  return std::pow(a, 1.0 - theta) * std::pow(b, theta);
}

}  // namespace

Report interpolation_check(const StateFunctional& rho, const StateFunctional& sigma, double p0, double p1,
                           double theta, double tol) {
  require_exponent(p0);
  require_exponent(p1);
  if (!(theta >= 0.0 && theta <= 1.0)) throw Error(ErrorCode::BadExponent, "θ outside [0,1]");
  if ((p0 < 2.0 && p1 > 2.0) || (p0 > 2.0 && p1 < 2.0)) {
    throw Error(ErrorCode::BadExponent, "endpoints must lie on the same side of 2");
  }
  const VectorState v = purify(rho);
  const double lhs = vector_norm(v, sigma, interpolated_exponent(p0, p1, theta));
  const double rhs = geometric_mix(vector_norm(v, sigma, p0), vector_norm(v, sigma, p1), theta);
  return Report::at_most(lhs, rhs, tol);
}

ConvexityScan log_convexity_scan(const StateFunctional& rho, const StateFunctional& sigma,
                                 std::vector<double> p_grid, double tol) {
  const VectorState v = purify(rho);
  auto phi = [&](double p) { return p * std::log(static_cast<double>(vector_norm(v, sigma, p))); };
  for (double& p : p_grid) {
    require_exponent(p);
    p = std::min(p, kScanExponentCap);
  }
  std::sort(p_grid.begin(), p_grid.end());
  p_grid.erase(std::unique(p_grid.begin(), p_grid.end()), p_grid.end());

  ConvexityScan scan;
  scan.p = p_grid;
  for (double p : p_grid) scan.phi.push_back(phi(p));
  scan.worst.slack = kInfinity;
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    for (std::size_t j = i + 1; j < p_grid.size(); ++j) {
      const bool low = p_grid[j] <= 2.0;
      const bool high = p_grid[i] >= 2.0;
      if (!low && !high) continue;
      const double mid = phi(0.5 * (p_grid[i] + p_grid[j]));
      const double avg = 0.5 * (scan.phi[i] + scan.phi[j]);
      Report r = Report::at_most(mid, avg, tol);
      ++scan.midpoints;
      if (scan.worst.pass && (!r.pass || r.slack < scan.worst.slack)) scan.worst = r;
    }
  }
  if (scan.midpoints == 0) scan.worst = Report{};
  return scan;
}

LinearMap LinearMap::identity(Index n, Index r) {
  return {ComplexMatrix::Identity(n * r, n * r), n, r, n, r};
}

VectorState LinearMap::apply(const VectorState& xi) const {
  if (xi.left_dim() != in_left || xi.right_dim() != in_right) {
    throw Error(ErrorCode::ShapeMismatch, "vector does not match the map's input space");
  }
  return VectorState::from_flat(matrix * xi.flat(), out_left, out_right);
}

double op_ratio(const LinearMap& t, const VectorState& xi, const StateFunctional& sigma,
                const StateFunctional& tau, double p, double q) {
  const double den = vector_norm(xi, sigma, p);
  if (!(den > 0.0) || std::isinf(den)) return 0.0;
  return static_cast<double>(vector_norm(t.apply(xi), tau, q)) / den;
}

VectorState lp_sample_vector(const StateFunctional& sigma, Index right_dim, double p, Rng& rng) {
  const Index n = sigma.dim();
  const Index rank = 1 + static_cast<Index>(rng.uniform(0.0, static_cast<double>(n) - 1e-9));
  const StateFunctional omega = random_density(n, std::min(rank, n), rng);
  const ComplexMatrix u = right_dim >= n ? ComplexMatrix(random_isometry(n, right_dim, rng).transpose())
                                         : ComplexMatrix(random_isometry(right_dim, n, rng));
  const ComplexMatrix m = real_power(sigma.density(), 0.5 - inverse(p)).matrix() *
                          real_power(omega.density(), inverse(p)).matrix() * u;
  VectorState xi(m);
  const double norm = vector_norm(xi, sigma, p);
  if (norm > 0.0 && std::isfinite(norm)) xi = xi * cplx(1.0 / norm);
  return xi;
}

namespace {

VectorState random_supported_vector(const StateFunctional& sigma, Index right_dim, Rng& rng) {
  const ComplexMatrix proj = support_projector(sigma.density()).matrix();
  return VectorState(proj * rng.ginibre(sigma.dim(), right_dim));
}

}  // namespace

OperatorNormEstimate weighted_op_norm(const LinearMap& t, const StateFunctional& sigma,
                                      const StateFunctional& tau, double p, double q,
                                      const SamplerConfig& config) {
  require_exponent(p);
  require_exponent(q);
  if (t.in_left != sigma.dim() || t.out_left != tau.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "weights do not match the map's algebra legs");
  }
  OperatorNormEstimate est;
  if (p == 2.0 && q == 2.0) {
    const ComplexMatrix pin = kron(support_projector(sigma.density()).matrix(),
                                   ComplexMatrix::Identity(t.in_right, t.in_right));
    const ComplexMatrix pout = kron(support_projector(tau.density()).matrix(),
                                    ComplexMatrix::Identity(t.out_right, t.out_right));
    Eigen::JacobiSVD<ComplexMatrix> svd(pout * t.matrix * pin, Eigen::ComputeFullV);
    est.lower_bound = svd.singularValues()(0);
    est.witness = VectorState::from_flat(svd.matrixV().col(0), t.in_left, t.in_right);
    est.exact = true;
    est.samples = 1;
    return est;
  }

  Rng rng(mix_seed(config.seed, 0x0B5));
  std::vector<std::pair<double, VectorState>> pool;
  for (int i = 0; i < config.samples; ++i) {
    VectorState xi = i % 2 == 0 ? lp_sample_vector(sigma, t.in_right, p, rng)
                                : random_supported_vector(sigma, t.in_right, rng);
    pool.emplace_back(op_ratio(t, xi, sigma, tau, p, q), std::move(xi));
  }
  std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

  const ComplexMatrix proj = support_projector(sigma.density()).matrix();
  const int starts = std::min<int>(config.ascent_starts, static_cast<int>(pool.size()));
  for (int s = 0; s < starts; ++s) {
    auto& [ratio, xi] = pool[s];
    double step = 0.3;
    for (int round = 0; round < config.ascent_rounds; ++round) {
      const ComplexMatrix dir = proj * rng.ginibre(t.in_left, t.in_right);
      const ComplexMatrix& m = xi.reshape_matrix();
      VectorState trial(m + step * m.norm() / std::max(dir.norm(), 1e-300) * dir);
      const double r = op_ratio(t, trial, sigma, tau, p, q);
      if (r > ratio) {
        ratio = r;
        xi = std::move(trial);
      } else {
        step *= 0.8;
      }
    }
  }
  std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  est.samples = config.samples;
  if (!pool.empty()) {
    est.lower_bound = pool.front().first;
    est.witness = pool.front().second;
  }
  return est;
}

RieszThorinReport riesz_thorin_check(const LinearMap& t, const StateFunctional& sigma,
                                     const StateFunctional& tau, const NormEndpoint& e0,
                                     const NormEndpoint& e1, double theta, const SamplerConfig& config,
                                     double tol) {
  for (double e : {e0.p, e0.q, e1.p, e1.q}) {
    if (!(e >= 2.0)) throw Error(ErrorCode::BadExponent, "interpolation endpoints must be ≥ 2");
  }
  if (!(theta >= 0.0 && theta <= 1.0)) throw Error(ErrorCode::BadExponent, "θ outside [0,1]");
  RieszThorinReport rep;
  rep.p_theta = interpolated_exponent(e0.p, e1.p, theta);
  rep.q_theta = interpolated_exponent(e0.q, e1.q, theta);
  rep.bound = geometric_mix(e0.norm, e1.norm, theta);
  Rng rng(mix_seed(config.seed, 0x27));
  for (int i = 0; i < config.samples; ++i) {
    const VectorState xi = i % 2 == 0 ? lp_sample_vector(sigma, t.in_right, rep.p_theta, rng)
                                      : random_supported_vector(sigma, t.in_right, rng);
    rep.max_ratio = std::max(rep.max_ratio, op_ratio(t, xi, sigma, tau, rep.p_theta, rep.q_theta));
  }
  rep.samples = config.samples;
  rep.check = Report::at_most(rep.max_ratio, rep.bound, tol);
  return rep;
}

Report norm_estimate_check(const StateFunctional& rho, const StateFunctional& sigma, double p, double tol) {
  require_exponent(p);
  const double lhs = state_norm(rho, sigma, p);
  const double rhs = std::sqrt(rho.trace()) * std::pow(std::sqrt(sigma.trace()), 2.0 * inverse(p) - 1.0);
  return p >= 2.0 ? Report::at_least(lhs, rhs, tol) : Report::at_most(lhs, rhs, tol);
}

Report modular_identity_check(const StateFunctional& rho, const StateFunctional& sigma,
                              const StateFunctional& omega, cplx z, double tol) {
  if (!(z.real() >= 0.0 && z.real() <= 0.5)) throw Error(ErrorCode::BadExponent, "Re z outside [0, 1/2]");
  const RealVector spec = eig_hermitian(sigma.density()).eigenvalues;
  if (!(spec(0) > kTolerances.support * spec(spec.size() - 1))) {
    throw Error(ErrorCode::NotSupported, "modular identity check requires a faithful σ");
  }
  const SpatialDerivative d_rho_sigma = spatial_derivative(rho, sigma);
  const SpatialDerivative d_omega_sigma = spatial_derivative(omega, sigma);
  const SpatialDerivative d_rho_omega = spatial_derivative(rho, omega);
  const ComplexVector s = purify(sigma).flat();
  const ComplexVector w = purify(omega).flat();
  const double lhs = (d_omega_sigma.power(0.5 - z) * (d_rho_sigma.power(z) * s)).norm();
  const double rhs = (d_rho_omega.power(z) * w).norm();
  return Report::equal(lhs, rhs, tol);
}

}  // namespace renyilab
