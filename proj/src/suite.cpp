#include "renyilab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

#include "renyilab/hyptest.hpp"

namespace renyilab {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"norms", "duality", "interpolation", "riesz_thorin", "divergences",
                                                  "alt",   "limits",  "dpi",           "modular",      "hyptest"};
  return names;
}

ToleranceTable default_tolerances() {
  return {
      {"norm_routes", 1e-5},   {"optimizer_attainment", 1e-8}, {"norm_estimate", 1e-9},
      {"duality", 1e-5},       {"hoelder", 1e-9},              {"interpolation", 1e-9},
      {"convexity", 1e-9},     {"riesz_thorin", 1e-8},         {"classical", 1e-10},
      {"divergence_routes", 1e-8}, {"monotonicity", 1e-9},     {"alt", 1e-9},
      {"alt_routes", 1e-8},    {"limit_half", 1e-8},           {"limit_one", 1e-4},
      {"limit_infinity", 1e-3}, {"dpi", 1e-8},                 {"padding", 1e-9},
      {"modular", 1e-7},       {"additivity", 1e-7},           {"bound_chain", 1e-8},
      {"np_optimality", 1e-9}, {"curve", 1e-9},                {"empirics", 1e-6},
  };
}

namespace {

[[noreturn]] void config_fail(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

void check_tolerances(const ToleranceTable& t) {
  const ToleranceTable known = default_tolerances();
  for (const auto& [name, value] : t) {
    if (!known.count(name)) config_fail("unknown tolerance \"" + name + "\"");
    if (!(value > 0.0) || !std::isfinite(value)) config_fail("tolerance \"" + name + "\" must be positive");
  }
}

}  // namespace

ToleranceTable load_tolerances(const std::filesystem::path& path) {
  Json j;
  try {
    j = read_json_file(path);
  } catch (const Error& e) {
    config_fail(e.what());
  }
  if (!j.is_object() || !j.contains("tolerances") || !j["tolerances"].is_object()) {
    config_fail(path.string() + ": expected {\"version\": …, \"tolerances\": {…}}");
  }
  if (!j.contains("version") || j["version"] != 1) config_fail(path.string() + ": unsupported config version");
  ToleranceTable out = default_tolerances();
  for (const auto& [name, value] : j["tolerances"].items()) {
    if (!value.is_number()) config_fail("tolerance \"" + name + "\" must be a number");
    if (!out.count(name)) config_fail("unknown tolerance \"" + name + "\"");
    out[name] = value.get<double>();
  }
  check_tolerances(out);
  return out;
}

std::filesystem::path config_path_from_env() {
  const char* env = std::getenv("RENYILAB_CONFIG");
  return env && *env ? std::filesystem::path(env) : std::filesystem::path();
}

void SuiteConfig::validate() const {
  const auto& names = suite_names();
  for (const std::string& s : suites) {
    if (std::find(names.begin(), names.end(), s) == names.end()) config_fail("unknown suite \"" + s + "\"");
  }
  for (Index d : dims) {
    if (d < 2 || d > 6) config_fail("dimension " + std::to_string(d) + " outside [2,6]");
  }
  if (jobs < 1) config_fail("--jobs must be at least 1");
  check_tolerances(tolerances);
}

namespace {

struct Instance {
  Rng rng;
  Index dim;
  const ToleranceTable& tol;
  std::vector<CheckResult> checks;

  double t(const char* name) const { return tol.at(name); }
  void add(std::string name, Report r) { checks.push_back({std::move(name), std::move(r)}); }
  StateFunctional density(Index rank) { return random_density(dim, rank, rng); }
  StateFunctional full_rank() { return density(dim); }
  StateFunctional any_rank() { return density(1 + static_cast<Index>(rng.uniform(0.0, static_cast<double>(dim)))); }
};

std::string label(const char* what, double x) {
  std::ostringstream os;
  os << what << "=";
  if (std::isinf(x)) {
    os << "inf";
  } else {
    os << x;
  }
  return os.str();
}

StateFunctional diagonal_state(const RealVector& p) {
  return StateFunctional(HermitianMatrix(ComplexMatrix(p.cast<cplx>().asDiagonal()), kInfinity));
}

void norms_suite(Instance& in) {
  const StateFunctional rho = in.any_rank();
  const StateFunctional sigma = in.full_rank();
  OptimizerConfig cfg;
  cfg.seed = in.rng.next_seed();
  for (double p : {1.0, 4.0 / 3.0, 2.0, 3.0, 4.0, 10.0}) {
    const double closed = state_norm(rho, sigma, p);
    const NormResult var = variational_norm(rho, sigma, p, cfg);
    in.add(label("route p", p), Report::equal(var.value, closed, in.t("norm_routes")));
    const double attained = std::sqrt(variational_objective(closed_form_optimizer(rho, sigma, p), rho, sigma, p));
    in.add(label("attainment p", p), Report::equal(attained, closed, in.t("optimizer_attainment")));
    in.add(label("estimate p", p), norm_estimate_check(rho, sigma, p, in.t("norm_estimate")));
  }
}

void duality_suite(Instance& in) {
  const StateFunctional sigma = in.any_rank();
  const VectorState xi = random_vector(in.dim, in.dim, in.rng);
  OptimizerConfig cfg;
  cfg.seed = in.rng.next_seed();
  for (double p : {1.0, 2.0, 4.0, 64.0, kInfinity}) {
    in.add(label("duality p", p),
           Report::equal(duality_value(xi, sigma, p, cfg).value, vector_norm(xi, sigma, p), in.t("duality")));
  }
  const double exponents[] = {1.0, 1.5, 2.0, 3.0, 4.0, kInfinity};
  for (int k = 0; k < 5; ++k) {
    const double p = exponents[static_cast<int>(in.rng.uniform(0.0, 6.0)) % 6];
    const VectorState a = random_vector(in.dim, in.dim, in.rng);
    const VectorState b = random_vector(in.dim, in.dim, in.rng);
    in.add(label("hoelder p", p), hoelder_check(a, b, sigma, p, in.t("hoelder")));
  }
}

void interpolation_suite(Instance& in) {
  const StateFunctional rho = in.any_rank();
  const StateFunctional sigma = in.full_rank();
  for (int k = 0; k < 4; ++k) {
    const double theta = in.rng.uniform();
    const double lo0 = in.rng.uniform(1.0, 2.0), lo1 = in.rng.uniform(1.0, 2.0);
    in.add("interpolation [1,2]", interpolation_check(rho, sigma, lo0, lo1, theta, in.t("interpolation")));
    const double hi0 = in.rng.uniform(2.0, 20.0);
    const double hi1 = k == 0 ? kInfinity : in.rng.uniform(2.0, 20.0);
    in.add("interpolation [2,inf]", interpolation_check(rho, sigma, hi0, hi1, theta, in.t("interpolation")));
  }
  const ConvexityScan scan =
      log_convexity_scan(rho, sigma, {1.0, 1.25, 1.5, 1.75, 2.0, 3.0, 4.0, 6.0, 8.0, 16.0, 64.0}, in.t("convexity"));
  in.add("log-convexity", scan.worst);
}

void riesz_thorin_suite(Instance& in) {
  const Channel ch = Channel::random(in.dim, in.dim, 2, in.rng);
  const StateFunctional sigma = in.full_rank();
  const StateFunctional tau = in.rng.uniform() < 0.5 ? apply_predual(ch, sigma) : in.full_rank();
  const LinearMap map = dilation_map(stinespring(ch), in.dim);
  const NormEndpoint sup{kInfinity, kInfinity, dilation_sup_norm(ch, sigma, tau)};
  const NormEndpoint two{2.0, 2.0, weighted_op_norm(map, sigma, tau, 2.0, 2.0).lower_bound};
  SamplerConfig cfg;
  cfg.samples = 40;
  cfg.seed = in.rng.next_seed();
  for (double p : {3.0, 4.0, 8.0}) {
    const RieszThorinReport rep = riesz_thorin_check(map, sigma, tau, sup, two, 2.0 / p, cfg, in.t("riesz_thorin"));
    in.add(label("ratio p", p), rep.check);
  }
}

double classical_log_q(const RealVector& p, const RealVector& q, double alpha) {
  double s = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) s += std::pow(p(i), alpha) * std::pow(q(i), 1.0 - alpha);
  }
  return std::log(s);
}

void divergences_suite(Instance& in) {
  const double tol = in.t("classical");
  const RealVector p = random_probability(in.dim, in.rng);
  const RealVector q = random_probability(in.dim, in.rng);
  const StateFunctional rho = diagonal_state(p), sigma = diagonal_state(q);
  for (double a : {0.5, 0.75, 1.5, 2.0, 4.0}) {
    const double classical = classical_log_q(p, q, a) / (a - 1.0);
    in.add(label("classical sandwiched a", a), Report::equal(sandwiched(rho, sigma, a).value, classical, tol));
    if (a <= 2.0) in.add(label("classical petz a", a), Report::equal(petz(rho, sigma, a).value, classical, tol));
  }
  double kl = 0.0, bc = 0.0, ratio = 0.0;
  for (Index i = 0; i < in.dim; ++i) {
    kl += p(i) * std::log(p(i) / q(i));
    bc += std::sqrt(p(i) * q(i));
    ratio = std::max(ratio, p(i) / q(i));
  }
  in.add("classical umegaki", Report::equal(umegaki(rho, sigma), kl, tol));
  in.add("classical fidelity", Report::equal(fidelity(rho, sigma), bc * bc, tol));
  in.add("classical dmax", Report::equal(dmax(rho, sigma), std::log(ratio), tol));
  for (double e : {1.0, 1.5, 2.0, 4.0, kInfinity}) {
    double classical = 0.0;
    for (Index i = 0; i < in.dim; ++i) {
      classical = std::isinf(e) ? std::max(classical, std::sqrt(p(i) / q(i)))
                                : classical + std::pow(p(i), e / 2.0) * std::pow(q(i), 1.0 - e / 2.0);
    }
    if (!std::isinf(e)) classical = std::pow(classical, 1.0 / e);
    in.add(label("classical norm p", e), Report::equal(state_norm(rho, sigma, e), classical, tol));
  }

  const StateFunctional r2 = in.any_rank();
  const StateFunctional s2 = in.full_rank();
  for (double a : {0.5, 0.75, 1.5, 2.0, 4.0, kInfinity}) {
    in.add(label("norm route a", a), Report::equal(sandwiched_via_norm(r2, s2, a).value, sandwiched(r2, s2, a).value,
                                                   in.t("divergence_routes")));
  }
  in.add("half is -log F", Report::equal(sandwiched(r2, s2, 0.5).value, -std::log(fidelity(r2, s2)),
                                         in.t("divergence_routes")));
  const MonotonicityScan scan =
      alpha_monotonicity_scan(r2, s2, {0.5, 0.6, 0.75, 0.9, 1.1, 1.5, 2.0, 3.0, 5.0, 10.0, kInfinity},
                              {0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.3, 1.5, 1.7, 1.9}, in.t("monotonicity"));
  in.add("alpha monotonicity", scan.worst);
}

void alt_suite(Instance& in, bool negate) {
  const StateFunctional rho = in.any_rank();
  const StateFunctional sigma = in.full_rank();
  for (double p : {1.0, 1.2, 1.5, 2.0, 3.0, 4.0}) {
    AltReport rep = alt_check(rho, sigma, p, in.t("alt"), in.t("alt_routes"));
    if (negate) {
      // Harness self-test: the same sides with the inequality reversed.
      rep.check = p >= 2.0 ? Report::at_least(rep.check.lhs, rep.check.rhs, in.t("alt"))
                           : Report::at_most(rep.check.lhs, rep.check.rhs, in.t("alt"));
    }
    in.add(label("alt p", p), rep.check);
  }
}

void limits_suite(Instance& in) {
  const StateFunctional rho = in.full_rank();
  const StateFunctional sigma = in.full_rank();
  const double d = umegaki(rho, sigma);
  in.add("limit 1/2", Report::equal(renyi_limit(rho, sigma, LimitTarget::Half).value, -std::log(fidelity(rho, sigma)),
                                    in.t("limit_half")));
  in.add("limit 1-", Report::equal(renyi_limit(rho, sigma, LimitTarget::OneFromBelow).value, d, in.t("limit_one")));
  in.add("limit 1+", Report::equal(renyi_limit(rho, sigma, LimitTarget::OneFromAbove).value, d, in.t("limit_one")));
  in.add("limit inf", Report::equal(renyi_limit(rho, sigma, LimitTarget::Infinity).value, dmax(rho, sigma),
                                    in.t("limit_infinity")));
}

void dpi_suite(Instance& in) {
  const double tol = in.t("dpi");
  const Index out_dim = 2 + static_cast<Index>(in.rng.uniform(0.0, static_cast<double>(in.dim - 1)));
  const Index min_kraus = (in.dim + out_dim - 1) / out_dim;
  const Index kraus = min_kraus + static_cast<Index>(in.rng.uniform(0.0, 3.0));
  const Channel ch = Channel::random(in.dim, out_dim, kraus, in.rng);
  const StateFunctional rho = in.any_rank();
  const StateFunctional sigma = in.any_rank();
  for (double a : {0.5, 0.75, 1.5, 2.0, kInfinity}) {
    const DpiReport rep = dpi_check_states(ch, rho, sigma, a, tol);
    in.add(label("states a", a), rep.divergence);
    if (a == 0.5) {
      in.add("relative entropy", rep.relative_entropy);
      in.add("fidelity", rep.fidelity);
    }
  }
  const VectorState xi = random_vector(in.dim, in.dim + 1, in.rng);
  for (double p : {1.0, 1.5, 2.0, 4.0, kInfinity}) in.add(label("vectors p", p), dpi_check_vectors(ch, xi, sigma, p, tol));

  // Two-outcome measurement of the Neyman–Pearson projector: the output is the
  // pair of outcome distributions.
  const StateFunctional s_full = in.full_rank();
  const TestOutcome np = neyman_pearson_test(rho, s_full, 1.0);
  const Channel meas = Channel::measurement(np.test.op());
  const RealVector p_out = (RealVector(2) << 1.0 - np.type_one, np.type_one).finished();
  const double t_two = np.type_two;
  const RealVector q_out = (RealVector(2) << t_two, 1.0 - t_two).finished();
  for (double a : {0.75, 2.0}) {
    const double measured = sandwiched(apply_predual(meas, rho), apply_predual(meas, s_full), a).value;
    in.add(label("measured a", a), Report::equal(measured, classical_log_q(p_out, q_out, a) / (a - 1.0), tol));
    in.add(label("measured bound a", a), Report::at_least(sandwiched(rho, s_full, a).value, measured, tol));
  }

  const StinespringDilation plain = stinespring(Channel::identity(in.dim));
  const StinespringDilation padded = stinespring(Channel::identity(in.dim).padded(2));
  for (double p : {1.0, 2.0, 4.0, kInfinity}) {
    in.add(label("padding p", p), Report::equal(vector_norm(embed_vector(padded, xi), sigma, p),
                                                vector_norm(embed_vector(plain, xi), sigma, p), in.t("padding")));
  }
}

void modular_suite(Instance& in) {
  const StateFunctional rho = in.any_rank();
  const StateFunctional sigma = in.full_rank();
  const StateFunctional omega = in.full_rank();
  for (int k = 0; k < 3; ++k) {
    const cplx z(in.rng.uniform(0.0, 0.5), in.rng.uniform(-2.0, 2.0));
    in.add("modular identity", modular_identity_check(rho, sigma, omega, z, in.t("modular")));
  }
}

void hyptest_suite(Instance& in) {
  const StateFunctional rho = in.any_rank();
  const StateFunctional tau = in.full_rank();
  int n_max = 1;
  while (std::pow(static_cast<double>(in.dim), n_max + 1) <= 64.0) ++n_max;
  std::vector<double> lambdas;
  for (int i = 0; i <= 8; ++i) lambdas.push_back(std::pow(10.0, -2.0 + 0.5 * i));
  for (int n = 1; n <= n_max; ++n) {
    const BoundChainReport rep =
        finite_n_bound_check(rho, tau, n, lambdas, {0.5, 0.75, 1.5, 2.0, 4.0}, in.t("bound_chain"), in.t("additivity"));
    in.add("bound chain n=" + std::to_string(n), rep.worst);
    if (n <= 5) {
      in.add("additivity n=" + std::to_string(n), Report::at_most(rep.additivity_error, 0.0, in.t("additivity")));
    }
  }

  const int n_np = std::min(2, n_max);
  const StateFunctional rho_n = tensor_power(rho, n_np), tau_n = tensor_power(tau, n_np);
  const double lambda = std::exp(in.rng.uniform(-2.0, 2.0));
  const TestOutcome best = neyman_pearson_test(rho_n, tau_n, lambda);
  for (int k = 0; k < 4; ++k) {
    const ComplexMatrix u = random_unitary(rho_n.dim(), in.rng);
    RealVector w(rho_n.dim());
    for (Index i = 0; i < w.size(); ++i) w(i) = in.rng.uniform();
    const TestOperator other(HermitianMatrix(u * w.cast<cplx>().asDiagonal() * u.adjoint(), kInfinity));
    const double cost_other = rho_n.trace() - other.expectation(rho_n) + lambda * other.expectation(tau_n);
    in.add("np optimality", Report::at_most(best.type_one + lambda * best.type_two, cost_other, in.t("np_optimality")));
  }

  std::vector<double> grid;
  const double top = static_cast<double>(dmax(rho, tau)) + 1.0;
  for (int i = 0; i <= 12; ++i) grid.push_back(top * i / 12.0);
  const ExponentCurve curve = strong_converse_curve(rho, tau, grid);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    in.add("curve nondecreasing", Report::at_most(curve.exponents[i - 1], curve.exponents[i], in.t("curve")));
    if (i + 1 < grid.size()) {
      in.add("curve convex", Report::at_most(curve.exponents[i],
                                             0.5 * (curve.exponents[i - 1] + curve.exponents[i + 1]), in.t("curve")));
    }
  }

  if (supported_on(rho, tau)) {
    const double r = static_cast<double>(umegaki(rho, tau)) + 0.25;
    const double bound = strong_converse_exponent(rho, tau, r);
    for (const EmpiricsRow& row : exponent_empirics(rho, tau, r, std::min(n_max, 4))) {
      in.add("empirics n=" + std::to_string(row.n), Report::at_least(row.exponent, bound, in.t("empirics")));
    }
  }
}

std::size_t suite_index(const std::string& suite) {
  const auto& names = suite_names();
  const auto it = std::find(names.begin(), names.end(), suite);
  if (it == names.end()) config_fail("unknown suite \"" + suite + "\"");
  return static_cast<std::size_t>(it - names.begin());
}

std::uint64_t instance_seed_of(std::size_t suite, std::uint64_t seed, Index dim) {
  return mix_seed(mix_seed(seed, static_cast<std::uint64_t>(dim)), static_cast<std::uint64_t>(suite));
}

}  // namespace

std::vector<CheckResult> run_instance(const std::string& suite, std::uint64_t seed, Index dim,
                                      const ToleranceTable& tol, bool negate_alt) {
  const std::size_t index = suite_index(suite);
  const std::uint64_t instance_seed = instance_seed_of(index, seed, dim);
  Instance in{Rng(instance_seed), dim, tol, {}};
  switch (index) {
    case 0: norms_suite(in); break;
    case 1: duality_suite(in); break;
    case 2: interpolation_suite(in); break;
    case 3: riesz_thorin_suite(in); break;
    case 4: divergences_suite(in); break;
    case 5: alt_suite(in, negate_alt); break;
    case 6: limits_suite(in); break;
    case 7: dpi_suite(in); break;
    case 8: modular_suite(in); break;
    default: hyptest_suite(in); break;
  }
  for (CheckResult& c : in.checks) c.report.instance_seed = instance_seed;
  return std::move(in.checks);
}

RunReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  struct Task {
    std::size_t suite;
    std::uint64_t seed;
    Index dim;
    int instance;
  };
  struct Outcome {
    std::vector<CheckResult> checks;
    std::string error;
    double seconds = 0.0;
  };
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < cfg.suites.size(); ++s) {
    int instance = 0;
    for (std::uint64_t seed : cfg.seeds) {
      for (Index dim : cfg.dims) tasks.push_back({s, seed, dim, instance++});
    }
  }
  std::vector<Outcome> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      const auto t0 = std::chrono::steady_clock::now();
      try {
        outcomes[i].checks = run_instance(cfg.suites[t.suite], t.seed, t.dim, cfg.tolerances, cfg.negate_alt);
      } catch (const std::exception& e) {
        outcomes[i].error = e.what();
      }
      outcomes[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int threads = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  RunReport run;
  for (const std::string& name : cfg.suites) {
    SuiteReport rep;
    rep.suite = name;
    if (name == "hyptest") {
      rep.notes.push_back(
          "CONJECTURE: equality of the strong converse exponent with the alpha-supremum is not asserted; "
          "only the lower bound is checked");
    }
    run.suites.push_back(std::move(rep));
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    SuiteReport& rep = run.suites[t.suite];
    const std::uint64_t instance_seed = instance_seed_of(suite_index(rep.suite), t.seed, t.dim);
    ++rep.instances;
    rep.wall_time += outcomes[i].seconds;
    if (!outcomes[i].error.empty()) {
      rep.failures.push_back({rep.suite, t.seed, t.dim, t.instance, instance_seed, "exception: " + outcomes[i].error,
                              0.0, 0.0, -kInfinity});
      continue;
    }
    for (const CheckResult& c : outcomes[i].checks) {
      ++rep.checks;
      if (!c.report.pass) {
        rep.failures.push_back({rep.suite, t.seed, t.dim, t.instance, instance_seed, c.name, c.report.lhs,
                                c.report.rhs, c.report.slack});
      }
    }
  }
  for (SuiteReport& rep : run.suites) {
    rep.pass = rep.failures.empty();
    run.pass = run.pass && rep.pass;
  }
  run.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

namespace {

template <class T>
std::vector<T> list_of(const Json& j, const char* name) {
  if (!j.contains(name)) return {};
  if (!j[name].is_array()) config_fail(std::string("\"") + name + "\" must be an array");
  try {
    return j[name].get<std::vector<T>>();
  } catch (const Json::exception&) {
    config_fail(std::string("\"") + name + "\" has entries of the wrong type");
  }
}

}  // namespace

SuiteConfig suite_config_from_json(const Json& j) {
  if (!j.is_object()) config_fail("suite config must be an object");
  static const std::set<std::string> keys = {"seeds", "dims", "tolerances", "suites", "jobs"};
  for (const auto& item : j.items()) {
    if (!keys.count(item.key())) config_fail("unknown config key \"" + item.key() + "\"");
  }
  SuiteConfig cfg;
  cfg.seeds = list_of<std::uint64_t>(j, "seeds");
  for (long long d : list_of<long long>(j, "dims")) cfg.dims.push_back(static_cast<Index>(d));
  cfg.suites = list_of<std::string>(j, "suites");
  if (j.contains("jobs")) {
    if (!j["jobs"].is_number_integer()) config_fail("\"jobs\" must be an integer");
    cfg.jobs = j["jobs"].get<int>();
  }
  if (j.contains("tolerances")) {
    if (!j["tolerances"].is_object()) config_fail("\"tolerances\" must be an object");
    for (const auto& [name, value] : j["tolerances"].items()) {
      if (!value.is_number()) config_fail("tolerance \"" + name + "\" must be a number");
      cfg.tolerances[name] = value.get<double>();
    }
  }
  cfg.validate();
  return cfg;
}

Json suite_config_to_json(const SuiteConfig& cfg) {
  Json j;
  j["seeds"] = cfg.seeds;
  Json dims = Json::array();
  for (Index d : cfg.dims) dims.push_back(d);
  j["dims"] = std::move(dims);
  j["suites"] = cfg.suites;
  Json tol = Json::object();
  for (const auto& [name, value] : cfg.tolerances) tol[name] = value;
  j["tolerances"] = std::move(tol);
  return j;
}

Json run_report_to_json(const RunReport& report, bool include_wall_time) {
  Json j;
  j["pass"] = report.pass;
  if (include_wall_time) j["wall_time"] = report.wall_time;
  Json suites = Json::array();
  for (const SuiteReport& s : report.suites) {
    Json js;
    js["suite"] = s.suite;
    js["instances"] = s.instances;
    js["checks"] = s.checks;
    js["pass"] = s.pass;
    if (include_wall_time) js["wall_time"] = s.wall_time;
    if (!s.notes.empty()) js["notes"] = s.notes;
    Json failures = Json::array();
    for (const FailureRecord& f : s.failures) {
      Json jf;
      jf["suite"] = f.suite;
      jf["seed"] = f.seed;
      jf["dim"] = f.dim;
      jf["instance"] = f.instance;
      jf["instance_seed"] = f.instance_seed;
      jf["check"] = f.check;
      jf["lhs"] = number_to_json(f.lhs);
      jf["rhs"] = number_to_json(f.rhs);
      jf["slack"] = number_to_json(f.slack);
      failures.push_back(std::move(jf));
    }
    js["failures"] = std::move(failures);
    suites.push_back(std::move(js));
  }
  j["suites"] = std::move(suites);
  return j;
}

}  // namespace renyilab
