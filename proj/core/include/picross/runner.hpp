#pragma once

// Named verification suites, the JSON report and the exit-code contract
// shared by the command-line tool and the acceptance tests.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "picross/linalg.hpp"
#include "picross/spaces.hpp"

namespace picross {

/// Bad configuration: unknown suite, out-of-range parameter, unwritable path.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SuiteConfig {
  std::vector<std::string> suites{"all"};
  SemigroupElement cutoff{16};
  int gridN = 24;
  Tolerance tol;
  std::vector<SemigroupElement> generators{SemigroupElement(1)};
  std::uint64_t seed = 1;
  std::string outPath;
  /// Size of the deterministic perturbation added to the operator under
  /// test in comparison checks. Zero disables it.
  double perturb = 0.0;

  /// Throws ConfigError unless gridN >= 8, cutoff >= 4, the tolerances are
  /// positive, perturb >= 0 and every suite name is known.
  void validate() const;
};

/// Reads the JSON form of SuiteConfig. Missing fields keep their defaults.
/// Semigroup elements are integers or [a_num, a_den, b_num, b_den].
SuiteConfig config_from_json(const std::string& text);

struct CheckResult {
  std::string name;
  std::string paperAnchor;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  long long millis = 0;
};

struct VerificationReport {
  std::string version;
  std::string timestamp;
  std::vector<CheckResult> checks;  // sorted by name
  int total = 0;
  int passed = 0;

  const CheckResult* find(const std::string& name) const;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::string paperAnchor;
};

/// Sorted by name, no duplicates.
std::vector<SuiteInfo> list_suites();

/// Runs the configured suites concurrently and assembles a sorted report.
/// Throws ConfigError on an invalid configuration.
VerificationReport run_suites(const SuiteConfig& config);

/// Newline-terminated JSON.
std::string report_to_json(const VerificationReport& report);

/// 0 when every check passed, 1 otherwise.
int exit_code(const VerificationReport& report);

/// Validates, runs, writes the report to config.outPath (or `out` when the
/// path is empty) and returns 0, 1 or 2. Diagnostics go to `err`.
int run(const SuiteConfig& config, std::ostream& out, std::ostream& err);

}  // namespace picross
