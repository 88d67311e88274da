// renyilab command-line front end.
//
// Exit codes: 0 success, 1 suite failure, 2 usage, parse or input error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "renyilab/hyptest.hpp"
#include "renyilab/io.hpp"
#include "renyilab/suite.hpp"

namespace {

using namespace renyilab;

constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;

// "1..50", "3", "1,2,7" or a mix such as "1..3,9".
std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoull(part));
      } else {
        const std::uint64_t lo = std::stoull(part.substr(0, dots));
        const std::uint64_t hi = std::stoull(part.substr(dots + 2));
        if (hi < lo) throw Error(ErrorCode::ConfigError, "empty range " + part);
        for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ConfigError, "cannot read integer list \"" + text + "\"");
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

// "a:b:steps" → steps + 1 evenly spaced points from a to b.
std::vector<double> parse_grid(const std::string& text) {
  double a = 0.0, b = 0.0;
  int steps = 0;
  char c1 = 0, c2 = 0;
  std::stringstream ss(text);
  if (!(ss >> a >> c1 >> b >> c2 >> steps) || c1 != ':' || c2 != ':' || steps < 1 || !ss.eof()) {
    throw Error(ErrorCode::ConfigError, "grid must look like a:b:steps, got \"" + text + "\"");
  }
  std::vector<double> out;
  for (int i = 0; i <= steps; ++i) out.push_back(a + (b - a) * i / steps);
  return out;
}

double parse_number(const std::string& text) {
  if (text == "inf" || text == "+inf") return kInfinity;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ConfigError, "not a number: \"" + text + "\"");
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

ToleranceTable resolve_tolerances(const std::string& config, const std::vector<std::string>& overrides) {
  std::filesystem::path path = config.empty() ? config_path_from_env() : std::filesystem::path(config);
  ToleranceTable tol = path.empty() ? default_tolerances() : load_tolerances(path);
  for (const std::string& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ConfigError, "--tol expects name=value, got \"" + o + "\"");
    const std::string name = o.substr(0, eq);
    if (!tol.count(name)) throw Error(ErrorCode::ConfigError, "unknown tolerance \"" + name + "\"");
    tol[name] = parse_number(o.substr(eq + 1));
  }
  return tol;
}

struct ComputeArgs {
  std::string kind = "sandwiched";
  std::string alpha = "2";
  std::string p = "2";
  std::string p1 = "inf";
  double theta = 0.5;
  std::string rho, sigma, vector, channel;
  int restarts = 8;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  bool variational = false;
};

Json divergence_json(const ComputeArgs& a) {
  const StateFunctional rho = load_state(a.rho);
  const StateFunctional sigma = load_state(a.sigma);
  const double alpha = parse_number(a.alpha);
  Json j;
  j["kind"] = a.kind;
  if (a.kind == "sandwiched" || a.kind == "petz") {
    const DivergenceValue d = a.kind == "sandwiched" ? sandwiched(rho, sigma, alpha) : petz(rho, sigma, alpha);
    j["alpha"] = number_to_json(alpha);
    j["value"] = number_to_json(d.value);
    j["route"] = std::string(to_string(d.route));
  } else if (a.kind == "umegaki") {
    j["value"] = number_to_json(umegaki(rho, sigma));
    j["route"] = "closed_form";
  } else if (a.kind == "fidelity") {
    j["value"] = number_to_json(fidelity(rho, sigma));
    j["route"] = "closed_form";
  } else if (a.kind == "dmax") {
    j["value"] = number_to_json(dmax(rho, sigma));
    j["route"] = "closed_form";
  } else {
    throw Error(ErrorCode::ConfigError, "unknown divergence kind \"" + a.kind + "\"");
  }
  return j;
}

Json norm_json(const ComputeArgs& a) {
  const StateFunctional sigma = load_state(a.sigma);
  const double p = parse_number(a.p);
  Json j;
  j["p"] = number_to_json(p);
  if (!a.vector.empty()) {
    j["value"] = number_to_json(vector_norm(load_vector(a.vector), sigma, p));
    return j;
  }
  const StateFunctional rho = load_state(a.rho);
  j["value"] = number_to_json(state_norm(rho, sigma, p));
  if (a.variational) {
    OptimizerConfig cfg;
    cfg.restarts = a.restarts;
    cfg.seed = a.seed;
    const NormResult r = variational_norm(rho, sigma, p, cfg);
    j["variational"] = number_to_json(r.value);
    j["gap"] = number_to_json(r.gap);
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    if (r.optimizer_omega) j["optimizer"] = state_to_json(*r.optimizer_omega);
  }
  return j;
}

Json duality_json(const ComputeArgs& a) {
  const StateFunctional sigma = load_state(a.sigma);
  const VectorState xi = a.vector.empty() ? purify(load_state(a.rho)) : load_vector(a.vector);
  const double p = parse_number(a.p);
  OptimizerConfig cfg;
  cfg.restarts = a.restarts;
  cfg.seed = a.seed;
  const NormResult r = duality_value(xi, sigma, p, cfg);
  Json j;
  j["p"] = number_to_json(p);
  j["q"] = number_to_json(conjugate_exponent(p));
  j["value"] = number_to_json(r.value);
  j["closed_form"] = number_to_json(vector_norm(xi, sigma, p));
  j["gap"] = number_to_json(r.gap);
  j["converged"] = r.converged;
  if (r.witness) j["witness"] = vector_to_json(*r.witness);
  return j;
}

Json interpolation_json(const ComputeArgs& a) {
  const StateFunctional rho = load_state(a.rho);
  const StateFunctional sigma = load_state(a.sigma);
  const double p0 = parse_number(a.p), p1 = parse_number(a.p1);
  Json j = report_to_json(interpolation_check(rho, sigma, p0, p1, a.theta, a.tol));
  j["p_theta"] = number_to_json(interpolated_exponent(p0, p1, a.theta));
  return j;
}

Json alt_json(const ComputeArgs& a) {
  const AltReport rep = alt_check(load_state(a.rho), load_state(a.sigma), parse_number(a.p), a.tol);
  Json j = report_to_json(rep.check);
  j["rhs_operator"] = number_to_json(rep.rhs_operator);
  j["route_gap"] = number_to_json(rep.route_gap);
  return j;
}

Json dpi_json(const ComputeArgs& a) {
  const ChannelFile ch = load_channel(a.channel);
  const double alpha = parse_number(a.alpha);
  const DpiReport rep = dpi_check_states(ch.channel, load_state(a.rho), load_state(a.sigma), alpha, a.tol);
  Json j;
  j["alpha"] = number_to_json(alpha);
  j["divergence"] = report_to_json(rep.divergence);
  j["relative_entropy"] = report_to_json(rep.relative_entropy);
  j["fidelity"] = report_to_json(rep.fidelity);
  j["pass"] = rep.pass;
  j["channel"] = {{"convention", ch.convention == KrausConvention::Heisenberg ? "heisenberg" : "schrodinger"},
                  {"converted_by_adjoint", ch.converted}};
  return j;
}

struct VerifyArgs {
  std::string suites = "all";
  std::string seeds = "1..10";
  std::string dims = "2,3";
  std::string config, suite_config, out;
  std::vector<std::string> tol;
  int jobs = 1;
  bool negate_alt = false;
  bool no_wall_time = false;
};

int run_verify(const VerifyArgs& v) {
  SuiteConfig cfg;
  if (!v.suite_config.empty()) {
    cfg = suite_config_from_json(read_json_file(v.suite_config));
  } else {
    cfg.seeds = parse_seed_list(v.seeds);
    for (std::uint64_t d : parse_seed_list(v.dims)) cfg.dims.push_back(static_cast<Index>(d));
    cfg.suites = v.suites == "all" ? suite_names() : split(v.suites);
    cfg.tolerances = resolve_tolerances(v.config, v.tol);
  }
  cfg.jobs = v.jobs;
  cfg.negate_alt = v.negate_alt;
  const RunReport report = run_suite(cfg);
  Json j = run_report_to_json(report, !v.no_wall_time);
  j["config"] = suite_config_to_json(cfg);
  if (v.out.empty()) {
    print_json(j);
  } else {
    std::ofstream out(v.out);
    if (!out) throw Error(ErrorCode::ConfigError, "cannot write " + v.out);
    out << j.dump(2) << "\n";
  }
  for (const SuiteReport& s : report.suites) {
    std::cerr << s.suite << ": " << s.instances << " instances, " << s.checks << " checks, "
              << s.failures.size() << " failures\n";
    for (const FailureRecord& f : s.failures) {
      std::cerr << "  FAIL " << f.suite << " seed=" << f.seed << " dim=" << f.dim << " instance=" << f.instance
                << " check=\"" << f.check << "\" lhs=" << f.lhs << " rhs=" << f.rhs << " slack=" << f.slack << "\n";
    }
  }
  return report.pass ? 0 : kExitSuiteFailure;
}

struct HyptestArgs {
  std::string rho, tau, grid = "0:2:20";
  double r = 0.5;
  int n_max = 6;
  double alpha_max = 64.0;
};

void run_curve(const HyptestArgs& h) {
  AlphaSearchConfig cfg;
  cfg.alpha_max = h.alpha_max;
  const ExponentCurve c = strong_converse_curve(load_state(h.rho), load_state(h.tau), parse_grid(h.grid), cfg);
  std::cout << "r,exponent,alpha_witness\n";
  for (std::size_t i = 0; i < c.r_grid.size(); ++i) {
    std::cout << csv_number(c.r_grid[i]) << "," << csv_number(c.exponents[i]) << ","
              << csv_number(c.alpha_witnesses[i]) << "\n";
  }
}

void run_empirics(const HyptestArgs& h) {
  const auto rows = exponent_empirics(load_state(h.rho), load_state(h.tau), h.r, h.n_max);
  std::cout << "n,typeI_exponent,type_one,type_two,lambda\n";
  for (const EmpiricsRow& row : rows) {
    std::cout << row.n << "," << csv_number(row.exponent) << "," << csv_number(row.type_one) << ","
              << csv_number(row.type_two) << "," << csv_number(row.lambda) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted L_p-norms, Renyi divergences, channels and hypothesis testing"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Evaluate one quantity from JSON inputs; prints JSON");
  compute->require_subcommand(1);
  auto add_states = [&ca](CLI::App* c) {
    c->add_option("--rho", ca.rho, "State file {\"density\", \"normalized\"}");
    c->add_option("--sigma", ca.sigma, "Reference state file")->required();
  };

  auto* div = compute->add_subcommand("divergence", "Divergence of rho from sigma");
  div->add_option("--kind", ca.kind, "sandwiched | petz | umegaki | fidelity | dmax")
      ->check(CLI::IsMember({"sandwiched", "petz", "umegaki", "fidelity", "dmax"}));
  div->add_option("--alpha", ca.alpha, "Order alpha, or inf");
  add_states(div);
  div->get_option("--rho")->required();

  auto* norm = compute->add_subcommand("norm", "Weighted L_p-norm of rho (canonical vector) or of --vector");
  norm->add_option("--p", ca.p, "Exponent p >= 1, or inf");
  norm->add_option("--vector", ca.vector, "Vector file {\"n\", \"m\", \"M\"} instead of --rho");
  norm->add_flag("--variational", ca.variational, "Also run the variational optimizer");
  norm->add_option("--restarts", ca.restarts, "Optimizer restarts");
  norm->add_option("--seed", ca.seed, "Optimizer seed");
  add_states(norm);

  auto* dual = compute->add_subcommand("duality", "Norm as a supremum over the dual unit ball");
  dual->add_option("--p", ca.p, "Exponent p >= 1, or inf");
  dual->add_option("--vector", ca.vector, "Vector file instead of --rho");
  dual->add_option("--restarts", ca.restarts, "Optimizer restarts");
  dual->add_option("--seed", ca.seed, "Optimizer seed");
  add_states(dual);

  auto* interp = compute->add_subcommand("interpolation", "Interpolation inequality between two exponents");
  interp->add_option("--p", ca.p, "First exponent p0");
  interp->add_option("--q", ca.p1, "Second exponent p1 (same side of 2 as p0)");
  interp->add_option("--theta", ca.theta, "Interpolation parameter in [0,1]");
  interp->add_option("--tol", ca.tol, "Tolerance");
  add_states(interp);
  interp->get_option("--rho")->required();

  auto* alt = compute->add_subcommand("alt", "Sandwiched against Petz trace functional at p = 2 alpha");
  alt->add_option("--p", ca.p, "Exponent p >= 1");
  alt->add_option("--tol", ca.tol, "Tolerance");
  add_states(alt);
  alt->get_option("--rho")->required();

  auto* dpi = compute->add_subcommand("dpi", "Data processing check for one channel");
  dpi->add_option("--channel", ca.channel, "Channel file {\"kraus\", \"convention\"}")->required();
  dpi->add_option("--alpha", ca.alpha, "Order alpha, or inf");
  dpi->add_option("--tol", ca.tol, "Tolerance");
  add_states(dpi);
  dpi->get_option("--rho")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the randomized verification suites; writes a JSON report");
  verify->add_option("--suites", va.suites, "Comma-separated suites or \"all\"");
  verify->add_option("--seeds", va.seeds, "Seeds, e.g. 1..50 or 1,4,9");
  verify->add_option("--dims", va.dims, "Dimensions in [2,6], e.g. 2,3");
  verify->add_option("--jobs", va.jobs, "Worker threads");
  verify->add_option("--config", va.config, "Tolerance file (default: $RENYILAB_CONFIG, then built-in table)");
  verify->add_option("--tol", va.tol, "Override one tolerance, name=value (repeatable)");
  verify->add_option("--suite-config", va.suite_config, "JSON file with seeds, dims, suites, tolerances");
  verify->add_option("--out", va.out, "Report path (default: stdout)");
  verify->add_flag("--negate-alt", va.negate_alt, "Test only: assert the ALT inequality in the wrong direction");
  verify->add_flag("--no-wall-time", va.no_wall_time, "Omit timings so reports compare byte for byte");

  HyptestArgs ha;
  auto* hyp = app.add_subcommand("hyptest", "Strong converse exponents; prints CSV");
  hyp->require_subcommand(1);
  auto* curve = hyp->add_subcommand("curve", "Lower bound sup_{alpha>1} ((alpha-1)/alpha)(r - D_alpha) on a grid");
  curve->add_option("--rho", ha.rho, "Null hypothesis state")->required();
  curve->add_option("--tau", ha.tau, "Alternative hypothesis state")->required();
  curve->add_option("--r-grid", ha.grid, "a:b:steps");
  curve->add_option("--alpha-max", ha.alpha_max, "Largest alpha searched before the analytic tail");
  auto* emp = hyp->add_subcommand("empirics", "Finite-n optimal tests with tau_n(T) = exp(-n r)");
  emp->add_option("--rho", ha.rho, "Null hypothesis state")->required();
  emp->add_option("--tau", ha.tau, "Alternative hypothesis state")->required();
  emp->add_option("--r", ha.r, "Rate r >= 0");
  emp->add_option("--n-max", ha.n_max, "Largest number of copies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    std::cout << std::setprecision(17);
    if (*compute) {
      if (*div) print_json(divergence_json(ca));
      if (*norm) {
        if (ca.rho.empty() == ca.vector.empty()) throw Error(ErrorCode::ConfigError, "give exactly one of --rho, --vector");
        print_json(norm_json(ca));
      }
      if (*dual) {
        if (ca.rho.empty() == ca.vector.empty()) throw Error(ErrorCode::ConfigError, "give exactly one of --rho, --vector");
        print_json(duality_json(ca));
      }
      if (*interp) print_json(interpolation_json(ca));
      if (*alt) print_json(alt_json(ca));
      if (*dpi) print_json(dpi_json(ca));
      return 0;
    }
    if (*verify) return run_verify(va);
    if (*curve) run_curve(ha);
    if (*emp) run_empirics(ha);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
