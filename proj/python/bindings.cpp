#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "renyilab/channels.hpp"
#include "renyilab/hyptest.hpp"
#include "renyilab/io.hpp"
#include "renyilab/suite.hpp"

namespace py = pybind11;
using namespace renyilab;

namespace {

StateFunctional state(const ComplexMatrix& m) { return StateFunctional::from_matrix(m); }

Channel channel(const std::vector<ComplexMatrix>& kraus) { return Channel(kraus); }

py::dict report_dict(const Report& r) {
  py::dict d;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["slack"] = r.slack;
  d["pass"] = r.pass;
  return d;
}

LimitTarget limit_target(const std::string& name) {
  if (name == "half") return LimitTarget::Half;
  if (name == "one_below") return LimitTarget::OneFromBelow;
  if (name == "one_above") return LimitTarget::OneFromAbove;
  if (name == "inf") return LimitTarget::Infinity;
  throw Error(ErrorCode::ConfigError, "limit target must be half, one_below, one_above or inf");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weighted L_p-norms, Renyi divergences, channels and hypothesis testing";

  // Messages carry the error code as a prefix, e.g. "NotPSD: ...".
  py::register_exception<Error>(m, "RenyilabError", PyExc_ValueError);

  m.def("random_density", [](Index dim, Index rank, std::uint64_t seed) { return random_density(dim, rank, seed).matrix(); },
        py::arg("dim"), py::arg("rank"), py::arg("seed"));
  m.def("random_channel", [](Index in_dim, Index out_dim, Index kraus, std::uint64_t seed) {
    Rng rng(seed);
    return Channel::random(in_dim, out_dim, kraus, rng).kraus();
  }, py::arg("in_dim"), py::arg("out_dim"), py::arg("kraus"), py::arg("seed"));

  m.def("sandwiched", [](const ComplexMatrix& r, const ComplexMatrix& s, double a) {
    return static_cast<double>(sandwiched(state(r), state(s), a).value);
  }, py::arg("rho"), py::arg("sigma"), py::arg("alpha"));
  m.def("sandwiched_via_norm", [](const ComplexMatrix& r, const ComplexMatrix& s, double a) {
    return static_cast<double>(sandwiched_via_norm(state(r), state(s), a).value);
  }, py::arg("rho"), py::arg("sigma"), py::arg("alpha"));
  m.def("petz", [](const ComplexMatrix& r, const ComplexMatrix& s, double a) {
    return static_cast<double>(petz(state(r), state(s), a).value);
  }, py::arg("rho"), py::arg("sigma"), py::arg("alpha"));
  m.def("umegaki", [](const ComplexMatrix& r, const ComplexMatrix& s) { return static_cast<double>(umegaki(state(r), state(s))); },
        py::arg("rho"), py::arg("sigma"));
  m.def("fidelity", [](const ComplexMatrix& r, const ComplexMatrix& s) { return fidelity(state(r), state(s)); },
        py::arg("rho"), py::arg("sigma"));
  m.def("dmax", [](const ComplexMatrix& r, const ComplexMatrix& s) { return static_cast<double>(dmax(state(r), state(s))); },
        py::arg("rho"), py::arg("sigma"));
  m.def("renyi_limit", [](const ComplexMatrix& r, const ComplexMatrix& s, const std::string& target) {
    return renyi_limit(state(r), state(s), limit_target(target)).value;
  }, py::arg("rho"), py::arg("sigma"), py::arg("target"));

  m.def("state_norm", [](const ComplexMatrix& r, const ComplexMatrix& s, double p) {
    return static_cast<double>(state_norm(state(r), state(s), p));
  }, py::arg("rho"), py::arg("sigma"), py::arg("p"));
  m.def("vector_norm", [](const ComplexMatrix& xi, const ComplexMatrix& s, double p) {
    return static_cast<double>(vector_norm(VectorState(xi), state(s), p));
  }, py::arg("xi"), py::arg("sigma"), py::arg("p"), "Norm of the vector with reshape matrix xi (n x m).");
  m.def("variational_norm", [](const ComplexMatrix& r, const ComplexMatrix& s, double p, int restarts, std::uint64_t seed) {
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    const NormResult res = variational_norm(state(r), state(s), p, cfg);
    py::dict d;
    d["value"] = static_cast<double>(res.value);
    d["gap"] = res.gap;
    d["iterations"] = res.iterations;
    d["converged"] = res.converged;
    if (res.optimizer_omega) d["omega"] = res.optimizer_omega->matrix();
    return d;
  }, py::arg("rho"), py::arg("sigma"), py::arg("p"), py::arg("restarts") = 8, py::arg("seed") = 0);
  m.def("interpolation_check", [](const ComplexMatrix& r, const ComplexMatrix& s, double p0, double p1, double theta) {
    return report_dict(interpolation_check(state(r), state(s), p0, p1, theta));
  }, py::arg("rho"), py::arg("sigma"), py::arg("p0"), py::arg("p1"), py::arg("theta"));
  m.def("alt_check", [](const ComplexMatrix& r, const ComplexMatrix& s, double p) {
    const AltReport rep = alt_check(state(r), state(s), p);
    py::dict d = report_dict(rep.check);
    d["route_gap"] = rep.route_gap;
    d["routes_agree"] = rep.routes_agree;
    return d;
  }, py::arg("rho"), py::arg("sigma"), py::arg("p"));

  m.def("apply_channel", [](const std::vector<ComplexMatrix>& kraus, const ComplexMatrix& r) {
    return apply_predual(channel(kraus), state(r)).matrix();
  }, py::arg("kraus"), py::arg("rho"), "Pre-dual action sum K rho K^dagger of a unital Kraus family.");
  m.def("dpi_check", [](const std::vector<ComplexMatrix>& kraus, const ComplexMatrix& r, const ComplexMatrix& s, double a) {
    const DpiReport rep = dpi_check_states(channel(kraus), state(r), state(s), a);
    py::dict d;
    d["divergence"] = report_dict(rep.divergence);
    d["relative_entropy"] = report_dict(rep.relative_entropy);
    d["fidelity"] = report_dict(rep.fidelity);
    d["pass"] = rep.pass;
    return d;
  }, py::arg("kraus"), py::arg("rho"), py::arg("sigma"), py::arg("alpha"));

  m.def("strong_converse_exponent", [](const ComplexMatrix& r, const ComplexMatrix& t, double rate) {
    double witness = 0.0;
    const double value = strong_converse_exponent(state(r), state(t), rate, {}, &witness);
    return py::make_tuple(value, witness);
  }, py::arg("rho"), py::arg("tau"), py::arg("r"), "Returns (exponent, maximizing alpha).");
  m.def("exponent_empirics", [](const ComplexMatrix& r, const ComplexMatrix& t, double rate, int n_max) {
    py::list rows;
    for (const EmpiricsRow& row : exponent_empirics(state(r), state(t), rate, n_max)) {
      py::dict d;
      d["n"] = row.n;
      d["lambda"] = row.lambda;
      d["type_one"] = row.type_one;
      d["type_two"] = row.type_two;
      d["exponent"] = row.exponent;
      rows.append(d);
    }
    return rows;
  }, py::arg("rho"), py::arg("tau"), py::arg("r"), py::arg("n_max"));

  m.def("_verify_json", [](const std::string& config) {
    const SuiteConfig cfg = suite_config_from_json(parse_json_text(config, "config"));
    RunReport report;
    {
      py::gil_scoped_release release;
      report = run_suite(cfg);
    }
    return run_report_to_json(report, false).dump();
  });
  m.def("suite_names", &suite_names);
}
