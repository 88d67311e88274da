#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "renyilab/io.hpp"

namespace renyilab {

/// Names accepted in SuiteConfig::suites, in execution order.
const std::vector<std::string>& suite_names();

using ToleranceTable = std::map<std::string, double>;

/// Built-in tolerance table; config/tolerances.json ships the same values.
ToleranceTable default_tolerances();

/// Reads {"version": 1, "tolerances": {name: value, …}} and overlays it on the
/// defaults. Unknown names and nonpositive values are ConfigError.
ToleranceTable load_tolerances(const std::filesystem::path& path);

/// $RENYILAB_CONFIG when set, otherwise empty.
std::filesystem::path config_path_from_env();

struct SuiteConfig {
  std::vector<std::uint64_t> seeds;
  std::vector<Index> dims;
  ToleranceTable tolerances = default_tolerances();
  std::vector<std::string> suites;
  int jobs = 1;
  bool negate_alt = false;  // test-only: asserts the ALT inequality in the wrong direction

  /// Throws ConfigError on unknown suites, dims outside [2,6] or bad tolerances.
  void validate() const;
};

struct FailureRecord {
  std::string suite;
  std::uint64_t seed = 0;
  Index dim = 0;
  int instance = 0;
  std::uint64_t instance_seed = 0;
  std::string check;
  double lhs = 0.0, rhs = 0.0, slack = 0.0;
};

struct SuiteReport {
  std::string suite;
  int instances = 0;
  int checks = 0;
  std::vector<FailureRecord> failures;
  std::vector<std::string> notes;
  double wall_time = 0.0;  // summed instance time in seconds
  bool pass = true;
};

struct RunReport {
  std::vector<SuiteReport> suites;
  double wall_time = 0.0;
  bool pass = true;
};

/// Runs every selected suite over the seed × dim grid on `jobs` worker
/// threads. Instance (seed, dim) of a suite is generated from
/// mix_seed(mix_seed(seed, dim), suite index) alone, so any failure can be
/// replayed with run_instance.
RunReport run_suite(const SuiteConfig& cfg);

/// One named check of one instance.
struct CheckResult {
  std::string name;
  Report report;
};

std::vector<CheckResult> run_instance(const std::string& suite, std::uint64_t seed, Index dim,
                                      const ToleranceTable& tol, bool negate_alt = false);

SuiteConfig suite_config_from_json(const Json& j);
Json suite_config_to_json(const SuiteConfig& cfg);
Json run_report_to_json(const RunReport& report, bool include_wall_time = true);

}  // namespace renyilab
