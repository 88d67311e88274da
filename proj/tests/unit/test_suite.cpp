#include "helpers.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "renyilab/suite.hpp"

using namespace testing;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("renyilab_suite_" + name);
  std::ofstream(path) << text;
  return path;
}

SuiteConfig small(std::vector<std::string> suites) {
  SuiteConfig cfg;
  cfg.seeds = {1, 2};
  cfg.dims = {2, 3};
  cfg.suites = std::move(suites);
  return cfg;
}

}  // namespace

TEST_CASE("shipped tolerance file matches the built-in table") {
  const ToleranceTable file = load_tolerances(std::filesystem::path(RENYILAB_SOURCE_DIR) / "config" / "tolerances.json");
  CHECK(file == default_tolerances());
  const Json j = read_json_file(std::filesystem::path(RENYILAB_SOURCE_DIR) / "config" / "tolerances.json");
  CHECK(j["tolerances"].size() == default_tolerances().size());
}

TEST_CASE("tolerance files are validated") {
  const auto over = write_temp("over.json", R"({"version": 1, "tolerances": {"alt": 1e-6}})");
  const ToleranceTable t = load_tolerances(over);
  CHECK(t.at("alt") == 1e-6);
  CHECK(t.at("dpi") == default_tolerances().at("dpi"));
  CHECK_ERROR(load_tolerances(write_temp("unknown.json", R"({"version": 1, "tolerances": {"nope": 1e-6}})")),
              ErrorCode::ConfigError);
  CHECK_ERROR(load_tolerances(write_temp("neg.json", R"({"version": 1, "tolerances": {"alt": -1}})")),
              ErrorCode::ConfigError);
  CHECK_ERROR(load_tolerances(write_temp("ver.json", R"({"version": 2, "tolerances": {}})")), ErrorCode::ConfigError);
  CHECK_ERROR(load_tolerances(write_temp("broken.json", R"({"version": 1,)")), ErrorCode::ConfigError);
}

TEST_CASE("config path from the environment") {
  setenv("RENYILAB_CONFIG", "/tmp/some.json", 1);
  CHECK(config_path_from_env() == std::filesystem::path("/tmp/some.json"));
  unsetenv("RENYILAB_CONFIG");
  CHECK(config_path_from_env().empty());
}

TEST_CASE("suite configuration validation") {
  SuiteConfig cfg = small({"alt"});
  CHECK_NOTHROW(cfg.validate());
  cfg.dims = {7};
  CHECK_ERROR(cfg.validate(), ErrorCode::ConfigError);
  cfg = small({"bogus"});
  CHECK_ERROR(cfg.validate(), ErrorCode::ConfigError);
  cfg = small({"alt"});
  cfg.tolerances["alt"] = 0.0;
  CHECK_ERROR(cfg.validate(), ErrorCode::ConfigError);
  cfg = small({"alt"});
  cfg.jobs = 0;
  CHECK_ERROR(cfg.validate(), ErrorCode::ConfigError);
}

TEST_CASE("suite config JSON") {
  const SuiteConfig cfg = small({"alt", "dpi"});
  const SuiteConfig back = suite_config_from_json(suite_config_to_json(cfg));
  CHECK(back.seeds == cfg.seeds);
  CHECK(back.dims == cfg.dims);
  CHECK(back.suites == cfg.suites);
  CHECK(back.tolerances == cfg.tolerances);
  Json extra = suite_config_to_json(cfg);
  extra["colour"] = "blue";
  CHECK_ERROR(suite_config_from_json(extra), ErrorCode::ConfigError);
}

TEST_CASE("every suite passes on a small grid") {
  SuiteConfig cfg = small(suite_names());
  cfg.seeds = {1};
  const RunReport report = run_suite(cfg);
  CHECK(report.pass);
  REQUIRE(report.suites.size() == suite_names().size());
  for (const SuiteReport& s : report.suites) {
    CHECK(s.pass == s.failures.empty());
    CHECK(s.instances == 2);
    CHECK(s.checks > 0);
  }
  const SuiteReport& hyp = report.suites.back();
  REQUIRE_FALSE(hyp.notes.empty());
  CHECK(hyp.notes.front().find("CONJECTURE") != std::string::npos);
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  SuiteConfig cfg = small({"norms", "alt", "dpi"});
  const std::string a = run_report_to_json(run_suite(cfg), false).dump();
  cfg.jobs = 3;
  const std::string b = run_report_to_json(run_suite(cfg), false).dump();
  CHECK(a == b);
  CHECK(a.find("wall_time") == std::string::npos);
}

TEST_CASE("negated ALT is caught and replays by seed") {
  SuiteConfig cfg = small({"alt"});
  cfg.negate_alt = true;
  const RunReport report = run_suite(cfg);
  CHECK_FALSE(report.pass);
  REQUIRE_FALSE(report.suites.front().failures.empty());
  const FailureRecord& f = report.suites.front().failures.front();
  const auto replay = run_instance("alt", f.seed, f.dim, cfg.tolerances, true);
  bool found = false;
  for (const CheckResult& c : replay) {
    if (c.name == f.check) {
      found = true;
      CHECK_FALSE(c.report.pass);
      CHECK(c.report.lhs == f.lhs);
      CHECK(c.report.instance_seed == f.instance_seed);
    }
  }
  CHECK(found);
  cfg.negate_alt = false;
  CHECK(run_suite(cfg).pass);
}
