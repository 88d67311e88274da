// Acceptance gate: criteria 1-10 at their stated counts and tolerances.
// Prints one PASS/FAIL line per criterion; exit status is nonzero on any FAIL.
//
// Usage: renyilab_acceptance [criterion ...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "renyilab/channels.hpp"
#include "renyilab/hyptest.hpp"

namespace {

using namespace renyilab;

// Worst-case bookkeeping for one criterion.
class Tally {
 public:
  void add(const Report& r, const std::string& where) {
    ++checks_;
    if (!r.pass) {
      ++failures_;
      if (failures_ <= 5) {
        std::ostringstream os;
        os << "    violation: " << where << " lhs=" << r.lhs << " rhs=" << r.rhs << " slack=" << r.slack;
        if (!r.note.empty()) os << " (" << r.note << ")";
        detail_.push_back(os.str());
      }
    }
    if (r.slack < worst_) {
      worst_ = r.slack;
      worst_where_ = where;
    }
  }
  void expect(bool ok, const std::string& where) {
    Report r;
    r.pass = ok;
    r.slack = ok ? 0.0 : -1.0;
    r.note = "condition";
    add(r, where);
  }

  bool pass() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks, " << failures_ << " violations, worst slack " << worst_;
    if (!worst_where_.empty()) os << " at " << worst_where_;
    return os.str();
  }
  const std::vector<std::string>& detail() const { return detail_; }

 private:
  int checks_ = 0;
  int failures_ = 0;
  double worst_ = 0.0;
  std::string worst_where_;
  std::vector<std::string> detail_;
};

std::string tag(const char* what, double x) {
  std::ostringstream os;
  os << what << "=";
  if (std::isinf(x)) {
    os << "inf";
  } else {
    os << x;
  }
  return os.str();
}

std::string at(std::uint64_t seed, Index n) { return "seed " + std::to_string(seed) + " n=" + std::to_string(n); }

StateFunctional diag_state(const RealVector& p) {
  return StateFunctional(HermitianMatrix(ComplexMatrix(p.cast<cplx>().asDiagonal()), kInfinity));
}

StateFunctional diag2(double a, double b) { return diag_state((RealVector(2) << a, b).finished()); }

StateFunctional plus_state() {
  const ComplexVector psi = (ComplexVector(2) << 1.0, 1.0).finished() / std::sqrt(2.0);
  return StateFunctional::pure(psi);
}

// Classical Rényi quantities of probability vectors, written out directly.
namespace classical {

double log_q(const RealVector& p, const RealVector& q, double a) {
  double m = -kInfinity;
  std::vector<double> terms;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) {
      terms.push_back(a * std::log(p(i)) + (1.0 - a) * std::log(q(i)));
      m = std::max(m, terms.back());
    }
  }
  double s = 0.0;
  for (double t : terms) s += std::exp(t - m);
  return m + std::log(s);
}

double renyi(const RealVector& p, const RealVector& q, double a) { return log_q(p, q, a) / (a - 1.0); }

double kl(const RealVector& p, const RealVector& q) {
  double s = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) s += p(i) * (std::log(p(i)) - std::log(q(i)));
  }
  return s;
}

double bhattacharyya_sq(const RealVector& p, const RealVector& q) {
  double s = 0.0;
  for (Index i = 0; i < p.size(); ++i) s += std::sqrt(p(i) * q(i));
  return s * s;
}

double max_ratio_log(const RealVector& p, const RealVector& q) {
  double m = -kInfinity;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) m = std::max(m, std::log(p(i) / q(i)));
  }
  return m;
}

// (Σ p^{e/2} q^{1−e/2})^{1/e}, or max √(p/q) at e = ∞.
double weighted_norm(const RealVector& p, const RealVector& q, double e) {
  if (std::isinf(e)) return std::exp(0.5 * max_ratio_log(p, q));
  double s = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) s += std::pow(p(i), e / 2.0) * std::pow(q(i), 1.0 - e / 2.0);
  }
  return std::pow(s, 1.0 / e);
}

// sup over α ∈ (1, α_max] ∪ {∞} of ((α−1)/α)(r − D_α), clamped at 0, with
// Brent's method on s = 1 − 1/α.
double converse_exponent(const RealVector& p, const RealVector& q, double r, double alpha_max) {
  auto f = [&](double s) { return s * r - (1.0 - s) * log_q(p, q, 1.0 / (1.0 - s)); };
  const double s_max = 1.0 - 1.0 / alpha_max;
  const auto [s_best, neg] =
      boost::math::tools::brent_find_minima([&](double s) { return -f(s); }, 1e-12, s_max, 60);
  (void)s_best;
  double best = std::max(-neg, f(s_max));
  best = std::max(best, r - max_ratio_log(p, q));
  return std::max(best, 0.0);
}

}  // namespace classical

RealVector random_prob_with_zeros(Index n, Rng& rng, bool zeros) {
  RealVector p = random_probability(n, rng);
  if (zeros) {
    const Index k = static_cast<Index>(rng.uniform(0.0, static_cast<double>(n - 1)));
    for (Index i = 0; i < k; ++i) p(i) = 0.0;
    p /= p.sum();
  }
  return p;
}

Index pick(Rng& rng, std::initializer_list<Index> xs) {
  const auto k = static_cast<std::size_t>(rng.uniform(0.0, static_cast<double>(xs.size())));
  return *(xs.begin() + std::min(k, xs.size() - 1));
}

Index random_rank(Index n, Rng& rng) { return 1 + static_cast<Index>(rng.uniform(0.0, static_cast<double>(n))); }

// 1. Closed form against the variational formula, and attainment of the closed-form optimizer.
Tally criterion1() {
  Tally t;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(mix_seed(101, seed));
    const Index n = pick(rng, {2, 3, 4});
    const StateFunctional rho = random_density(n, random_rank(n, rng), rng);
    const StateFunctional sigma = random_density(n, n, rng);
    OptimizerConfig cfg;
    cfg.seed = seed;
    for (double p : {1.0, 4.0 / 3.0, 2.0, 3.0, 4.0, 10.0}) {
      const double closed = state_norm(rho, sigma, p);
      t.add(Report::equal(variational_norm(rho, sigma, p, cfg).value, closed, 1e-5), at(seed, n) + " route " + tag("p", p));
      const double attained = std::sqrt(variational_objective(closed_form_optimizer(rho, sigma, p), rho, sigma, p));
      t.add(Report::equal(attained, closed, 1e-8), at(seed, n) + " attainment " + tag("p", p));
    }
  }
  return t;
}

// 2. Norm duality and the Hölder inequality.
Tally criterion2() {
  Tally t;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(mix_seed(202, seed));
    const Index n = pick(rng, {2, 3, 4});
    const StateFunctional sigma = random_density(n, random_rank(n, rng), rng);
    const VectorState xi = random_vector(n, 1 + static_cast<Index>(rng.uniform(0.0, 4.0)), rng);
    OptimizerConfig cfg;
    cfg.seed = seed;
    for (double p : {2.0, 4.0, 64.0}) {
      t.add(Report::equal(duality_value(xi, sigma, p, cfg).value, vector_norm(xi, sigma, p), 1e-5),
            at(seed, n) + " duality " + tag("p", p));
    }
  }
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    Rng rng(mix_seed(203, seed));
    const Index n = pick(rng, {2, 3, 4, 5});
    const Index r = 1 + static_cast<Index>(rng.uniform(0.0, 5.0));
    const StateFunctional sigma = random_density(n, random_rank(n, rng), rng);
    const double u = rng.uniform();
    const double p = u < 0.1 ? 1.0 : (u > 0.9 ? kInfinity : 1.0 / (1.0 - 0.95 * rng.uniform()));
    t.add(hoelder_check(random_vector(n, r, rng), random_vector(n, r, rng), sigma, p, 1e-9),
          at(seed, n) + " hoelder " + tag("p", p));
  }
  return t;
}

// 3. Interpolation in both exponent regimes and log-convexity.
Tally criterion3() {
  Tally t;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(mix_seed(303, seed));
    const Index n = pick(rng, {2, 3, 4});
    const StateFunctional rho = random_density(n, random_rank(n, rng), rng);
    const StateFunctional sigma = random_density(n, n, rng);
    const double theta = rng.uniform();
    t.add(interpolation_check(rho, sigma, rng.uniform(1.0, 2.0), rng.uniform(1.0, 2.0), theta, 1e-9),
          at(seed, n) + " regime [1,2]");
    const double p1 = seed % 5 == 0 ? kInfinity : rng.uniform(2.0, 30.0);
    t.add(interpolation_check(rho, sigma, rng.uniform(2.0, 30.0), p1, theta, 1e-9), at(seed, n) + " regime [2,inf]");
    const ConvexityScan scan =
        log_convexity_scan(rho, sigma, {1.0, 1.1, 1.25, 1.5, 1.75, 2.0, 2.5, 3.0, 4.0, 6.0, 8.0, 16.0, 32.0, 64.0}, 1e-9);
    t.add(scan.worst, at(seed, n) + " convexity");
  }
  return t;
}

// 4. Sandwiched against Petz trace functionals, plus the hand-checked anchor.
Tally criterion4() {
  Tally t;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    Rng rng(mix_seed(404, seed));
    const Index n = pick(rng, {2, 3, 4});
    const StateFunctional rho = random_density(n, random_rank(n, rng), rng);
    const StateFunctional sigma = random_density(n, n, rng);
    std::vector<double> ps;
    for (double a : {0.6, 0.75, 1.5, 2.0}) ps.push_back(2.0 * a);
    ps.push_back(rng.uniform(1.0, 2.0));
    for (double p : ps) {
      const AltReport rep = alt_check(rho, sigma, p, 1e-9, 1e-8);
      t.add(rep.check, at(seed, n) + " alt " + tag("p", p));
      t.add(Report::at_most(rep.route_gap, 0.0, 1e-8 * std::max(1.0, rep.check.rhs)), at(seed, n) + " operator route " + tag("p", p));
    }
  }
  const StateFunctional rho = plus_state(), sigma = diag2(0.25, 0.75);
  const double q2 = std::exp(log_q_sandwiched(rho, sigma, 2.0));
  const double q2_bar = std::exp(log_q_petz(rho, sigma, 2.0));
  // ⟨+|σ^{-1/2}|+⟩² and ⟨+|σ^{-1}|+⟩ for diagonal σ.
  const double q2_hand = std::pow(0.5 * (1.0 / std::sqrt(0.25) + 1.0 / std::sqrt(0.75)), 2);
  const double q2_bar_hand = 0.5 * (1.0 / 0.25 + 1.0 / 0.75);
  t.add(Report::equal(q2, q2_hand, 1e-10), "anchor Q_2");
  t.add(Report::equal(q2_bar, q2_bar_hand, 1e-10), "anchor Qbar_2");
  t.add(Report::equal(q2, 2.48803, 5e-6), "anchor Q_2 printed value");
  t.add(Report::equal(q2_bar, 2.66667, 5e-6), "anchor Qbar_2 printed value");
  t.add(Report::at_most(q2, q2_bar, 1e-9), "anchor ordering");
  return t;
}

// 5. Limits at α = 1/2, 1± and ∞.
Tally criterion5() {
  Tally t;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(mix_seed(505, seed));
    const Index n = pick(rng, {2, 3, 4});
    const StateFunctional rho = random_density(n, n, rng);
    const StateFunctional sigma = random_density(n, n, rng);
    const double d = umegaki(rho, sigma);
    t.add(Report::equal(sandwiched(rho, sigma, 0.5).value, -std::log(fidelity(rho, sigma)), 1e-8), at(seed, n) + " half");
    t.add(Report::equal(renyi_limit(rho, sigma, LimitTarget::OneFromBelow).value, d, 1e-4), at(seed, n) + " 1-");
    t.add(Report::equal(renyi_limit(rho, sigma, LimitTarget::OneFromAbove).value, d, 1e-4), at(seed, n) + " 1+");
    const LimitResult inf = renyi_limit(rho, sigma, LimitTarget::Infinity);
    t.add(Report::equal(inf.value, dmax(rho, sigma), 1e-3), at(seed, n) + " inf");
    t.expect(inf.alphas.back() <= 1000.0, at(seed, n) + " inf schedule ends by 1000");

    // Rank-deficient ρ for the α = 1/2 and α → ∞ limits.
    const StateFunctional thin = random_density(n, random_rank(n, rng), rng);
    t.add(Report::equal(sandwiched(thin, sigma, 0.5).value, -std::log(fidelity(thin, sigma)), 1e-8),
          at(seed, n) + " half, low rank");
    t.add(Report::equal(renyi_limit(thin, sigma, LimitTarget::Infinity).value, dmax(thin, sigma), 1e-3),
          at(seed, n) + " inf, low rank");
  }
  const StateFunctional rho = diag2(0.5, 0.5), sigma = diag2(0.25, 0.75);
  const double kl_hand = std::log(2.0) - 0.5 * std::log(3.0);
  t.add(Report::equal(kl_hand, 0.143841, 5e-7), "anchor printed value");
  t.add(Report::equal(renyi_limit(rho, sigma, LimitTarget::OneFromBelow).value, kl_hand, 1e-4), "anchor 1-");
  t.add(Report::equal(renyi_limit(rho, sigma, LimitTarget::OneFromAbove).value, kl_hand, 1e-4), "anchor 1+");
  t.add(Report::equal(renyi_limit(rho, sigma, LimitTarget::Infinity).value, std::log(2.0), 1e-3), "anchor inf");
  return t;
}

// 6. Data processing for states and vectors; measurement channels.
Tally criterion6() {
  Tally t;
  const double alphas[] = {0.5, 0.6, 0.75, 0.9, 1.5, 2.0, 3.0, 5.0, kInfinity};
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    Rng rng(mix_seed(606, seed));
    const Index n = pick(rng, {2, 3, 4});
    const Index m = pick(rng, {2, 3, 4});
    const Index kraus = (n + m - 1) / m + static_cast<Index>(rng.uniform(0.0, 3.0));
    const Channel ch = Channel::random(n, m, kraus, rng);
    const StateFunctional rho = random_density(n, random_rank(n, rng), rng);
    const StateFunctional sigma = random_density(n, random_rank(n, rng), rng);
    const double a = alphas[static_cast<int>(rng.uniform(0.0, 9.0)) % 9];
    const DpiReport rep = dpi_check_states(ch, rho, sigma, a, 1e-8);
    t.add(rep.divergence, at(seed, n) + " states " + tag("alpha", a));
    t.add(rep.relative_entropy, at(seed, n) + " relative entropy");
    t.add(rep.fidelity, at(seed, n) + " fidelity");

    // Non-canonical vectors: random reshape matrices with a free right leg.
    const VectorState xi = random_vector(n, 1 + static_cast<Index>(rng.uniform(0.0, 5.0)), rng);
    const double u = rng.uniform();
    const double p = u < 0.4 ? rng.uniform(1.0, 2.0) : (u < 0.9 ? rng.uniform(2.0, 20.0) : kInfinity);
    t.add(dpi_check_vectors(ch, xi, sigma, p, 1e-8), at(seed, n) + " vectors " + tag("p", p));
    t.add(dpi_check_vectors(ch, xi, sigma, 1.0 + rng.uniform(), 1e-8), at(seed, n) + " vectors p in [1,2)");
  }

  // Measurement of a Neyman–Pearson test on ρ^{⊗k}, τ^{⊗k}: the output is the
  // pair of outcome distributions and cannot exceed k·D_α(ρ‖τ).
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(mix_seed(607, seed));
    const Index n = pick(rng, {2, 3});
    const int k = 1 + static_cast<int>(seed % 2);
    const StateFunctional rho = random_density(n, random_rank(n, rng), rng);
    const StateFunctional tau = random_density(n, n, rng);
    const StateFunctional rho_k = tensor_power(rho, k), tau_k = tensor_power(tau, k);
    const TestOutcome np = neyman_pearson_test(rho_k, tau_k, std::exp(rng.uniform(-2.0, 2.0)));
    const Channel meas = Channel::measurement(np.test.op());
    // Outcome probabilities; at T = 0 or T = 1 the residues of 1 − 1 are set to zero.
    auto clean = [](RealVector v) { return RealVector((v.array() < 1e-12).select(0.0, v)); };
    const RealVector p_out = clean((RealVector(2) << 1.0 - np.type_one, np.type_one).finished());
    const RealVector q_out = clean((RealVector(2) << np.type_two, 1.0 - np.type_two).finished());
    for (double a : {0.75, 1.5, 2.0, 4.0}) {
      const double measured = sandwiched(apply_predual(meas, rho_k), apply_predual(meas, tau_k), a).value;
      t.add(Report::equal(measured, classical::renyi(p_out, q_out, a), 1e-8), at(seed, n) + " measured " + tag("alpha", a));
      t.add(Report::at_least(k * sandwiched(rho, tau, a).value, measured, 1e-8),
            at(seed, n) + " measured bound " + tag("alpha", a));
    }
  }
  return t;
}

// 7. Riesz–Thorin midpoint ratios for Stinespring isometries.
Tally criterion7() {
  Tally t;
  int samples[3] = {0, 0, 0};
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Rng rng(mix_seed(707, seed));
    const Index n = pick(rng, {2, 3});
    const Index m = pick(rng, {2, 3});
    const Channel ch = Channel::random(n, m, (n + m - 1) / m + 1, rng);
    const StateFunctional sigma = random_density(n, n, rng);
    const StateFunctional tau = seed % 2 ? apply_predual(ch, sigma) : random_density(m, m, rng);
    const LinearMap map = dilation_map(stinespring(ch), n);
    const OperatorNormEstimate two = weighted_op_norm(map, sigma, tau, 2.0, 2.0);
    t.expect(two.exact, at(seed, n) + " (2,2) endpoint exact");
    const NormEndpoint e0{kInfinity, kInfinity, dilation_sup_norm(ch, sigma, tau)};
    const NormEndpoint e1{2.0, 2.0, two.lower_bound};
    SamplerConfig cfg;
    cfg.samples = 40;
    cfg.seed = seed;
    int i = 0;
    for (double p : {3.0, 4.0, 8.0}) {
      const RieszThorinReport rep = riesz_thorin_check(map, sigma, tau, e0, e1, 2.0 / p, cfg, 1e-8);
      samples[i++] += rep.samples;
      t.add(Report::at_most(rep.max_ratio / rep.bound, 1.0, 1e-8), at(seed, n) + " ratio " + tag("p", p));
    }
  }
  for (int s : samples) t.expect(s >= 1000, "at least 1000 samples per exponent");
  return t;
}

// 8. Modular identity on faithful qubit and qutrit triples.
Tally criterion8() {
  Tally t;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(mix_seed(808, seed));
    const Index n = pick(rng, {2, 3});
    const StateFunctional rho = random_density(n, n, rng);
    const StateFunctional sigma = random_density(n, n, rng);
    const StateFunctional omega = random_density(n, n, rng);
    const cplx z(rng.uniform(0.0, 0.5), rng.uniform(-3.0, 3.0));
    t.add(modular_identity_check(rho, sigma, omega, z, 1e-7), at(seed, n) + " z=" + std::to_string(z.real()));
  }
  return t;
}

// 9. Additivity, the finite-n bound chain, empirical exponents and a classical curve oracle.
Tally criterion9() {
  Tally t;
  std::vector<double> lambdas;
  for (int i = 0; i <= 10; ++i) lambdas.push_back(std::pow(10.0, -2.0 + 0.4 * i));
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Rng rng(mix_seed(909, seed));
    const StateFunctional rho = random_density(2, seed % 3 == 0 ? 1 : 2, rng);
    const StateFunctional tau = random_density(2, 2, rng);
    for (int n = 1; n <= 6; ++n) {
      const BoundChainReport rep =
          finite_n_bound_check(rho, tau, n, lambdas, {0.5, 0.75, 1.5, 2.0, 4.0}, 1e-8, 1e-7);
      t.add(rep.worst, at(seed, 2) + " chain copies=" + std::to_string(n));
      if (n <= 5) {
        t.add(Report::at_most(rep.additivity_error, 0.0, 1e-7), at(seed, 2) + " additivity copies=" + std::to_string(n));
      }
    }
  }
  // Qutrit additivity up to five copies (243 dimensions).
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    Rng rng(mix_seed(910, seed));
    const StateFunctional rho = random_density(3, 1 + seed % 3, rng);
    const StateFunctional tau = random_density(3, 3, rng);
    for (int n = 2; n <= 5; ++n) {
      const BoundChainReport rep = finite_n_bound_check(rho, tau, n, {1.0}, {0.5, 0.75, 1.5, 2.0, 4.0}, 1e-8, 1e-7);
      t.add(Report::at_most(rep.additivity_error, 0.0, 1e-7), at(seed, 3) + " additivity copies=" + std::to_string(n));
    }
  }

  auto empirics = [&t](const StateFunctional& rho, const StateFunctional& tau, double r, int n_max,
                       const std::string& where) {
    const double bound = strong_converse_exponent(rho, tau, r);
    for (const EmpiricsRow& row : exponent_empirics(rho, tau, r, n_max)) {
      t.add(Report::at_least(row.exponent, bound, 1e-6), where + " empirics copies=" + std::to_string(row.n));
    }
  };
  empirics(diag2(0.5, 0.5), diag2(0.25, 0.75), 0.5, 10, "commuting pair r=0.5");
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(mix_seed(911, seed));
    const StateFunctional rho = random_density(2, 2, rng);
    const StateFunctional tau = random_density(2, 2, rng);
    const double d = umegaki(rho, tau), dm = dmax(rho, tau);
    for (double r : {d + 0.25 * (dm - d), d + 0.75 * (dm - d), dm + 0.2}) empirics(rho, tau, r, 6, at(seed, 2));
  }

  // Commuting instances against the classical formula.
  const AlphaSearchConfig cfg;
  auto curve = [&t, &cfg](const RealVector& p, const RealVector& q, const std::vector<double>& grid,
                          const std::string& where) {
    const ExponentCurve c = strong_converse_curve(diag_state(p), diag_state(q), grid, cfg);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      t.add(Report::equal(c.exponents[i], classical::converse_exponent(p, q, grid[i], cfg.alpha_max), 1e-9),
            where + " " + tag("r", grid[i]));
    }
  };
  curve((RealVector(2) << 0.5, 0.5).finished(), (RealVector(2) << 0.25, 0.75).finished(), {0.4}, "anchor pair");
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(mix_seed(912, seed));
    const Index n = pick(rng, {2, 3, 4, 5});
    const RealVector p = random_prob_with_zeros(n, rng, seed % 3 == 0);
    const RealVector q = random_probability(n, rng);
    const double top = classical::max_ratio_log(p, q) + 0.5;
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(top * i / 10.0);
    curve(p, q, grid, at(seed, n));
  }
  return t;
}

// 10. Diagonal instances against scalar formulas.
Tally criterion10() {
  Tally t;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(mix_seed(1010, seed));
    const Index n = pick(rng, {2, 3, 4, 5, 6});
    const RealVector p = random_prob_with_zeros(n, rng, seed % 4 == 0);
    const RealVector q = random_probability(n, rng);
    const StateFunctional rho = diag_state(p), sigma = diag_state(q);
    const std::string w = at(seed, n);
    for (double a : {0.5, 0.6, 0.75, 0.9, 1.1, 1.5, 2.0, 3.0, 5.0}) {
      const double c = classical::renyi(p, q, a);
      t.add(Report::equal(sandwiched(rho, sigma, a).value, c, 1e-10), w + " sandwiched " + tag("alpha", a));
      t.add(Report::equal(sandwiched_via_norm(rho, sigma, a).value, c, 1e-10), w + " via norm " + tag("alpha", a));
      if (a <= 2.0) t.add(Report::equal(petz(rho, sigma, a).value, c, 1e-10), w + " petz " + tag("alpha", a));
    }
    for (double a : {0.1, 0.3}) {
      t.add(Report::equal(petz(rho, sigma, a).value, classical::renyi(p, q, a), 1e-10), w + " petz " + tag("alpha", a));
    }
    t.add(Report::equal(sandwiched(rho, sigma, kInfinity).value, classical::max_ratio_log(p, q), 1e-10), w + " sandwiched inf");
    t.add(Report::equal(umegaki(rho, sigma), classical::kl(p, q), 1e-10), w + " umegaki");
    t.add(Report::equal(fidelity(rho, sigma), classical::bhattacharyya_sq(p, q), 1e-10), w + " fidelity");
    t.add(Report::equal(dmax(rho, sigma), classical::max_ratio_log(p, q), 1e-10), w + " dmax");
    for (double e : {1.0, 4.0 / 3.0, 1.5, 2.0, 3.0, 4.0, 10.0, kInfinity}) {
      t.add(Report::equal(state_norm(rho, sigma, e), classical::weighted_norm(p, q, e), 1e-10), w + " norm " + tag("p", e));
    }
  }
  return t;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Tally()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "closed-form and variational norms agree; optimizer attains", criterion1},
      {2, "duality value and Hoelder inequality", criterion2},
      {3, "interpolation and log-convexity", criterion3},
      {4, "sandwiched vs Petz trace functionals", criterion4},
      {5, "limits at 1/2, 1 and infinity", criterion5},
      {6, "data processing for states, vectors and measurements", criterion6},
      {7, "Riesz-Thorin midpoint ratios", criterion7},
      {8, "modular identity", criterion8},
      {9, "hypothesis testing bounds and classical curve", criterion9},
      {10, "commuting reduction", criterion10},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool ok = true;
  const auto start = std::chrono::steady_clock::now();
  for (const Criterion& c : all) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Tally tally;
    std::string error;
    try {
      tally = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = error.empty() && tally.pass();
    ok = ok && pass;
    std::printf("%s criterion %d: %s [%s] (%.1fs)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                error.empty() ? tally.summary().c_str() : ("exception: " + error).c_str(), secs);
    for (const std::string& d : tally.detail()) std::printf("%s\n", d.c_str());
    std::fflush(stdout);
  }
  std::printf("total %.1fs\n", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return ok ? 0 : 1;
}
