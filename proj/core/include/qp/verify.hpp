#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qp {

struct SuiteOptions {
  int order = 20;   ///< N, series order
  int kmax = 12;    ///< K, largest distance index
  int faces = 5;    ///< n, largest map size enumerated
  std::string suite = "all";  ///< all | series | kernel | maps
  std::uint64_t seed = 20240611;
  /// Name of a check whose computed data is corrupted before comparison.
  /// Exercises the failure path; empty in normal use.
  std::string inject_fault;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool overall() const;
  std::string to_table() const;
  /// Deterministic for fixed options: timings are left out.
  std::string to_json(const SuiteOptions& options) const;
};

/// Largest n accepted for enumeration: 6, or QP_MAX_FACES (at most 8).
int max_faces();

/// Throws std::invalid_argument when options are outside N <= 64, K <= 32,
/// 1 <= n <= max_faces(), or the suite name is unknown.
void validate_options(const SuiteOptions& options);

struct NamedCheck {
  std::string name;
  std::string suite;
  std::function<std::string(const SuiteOptions&)> run;  ///< returns detail, throws on failure
};

/// All checks in report order.
const std::vector<NamedCheck>& all_checks();

/// Runs one check by name with timing and exception capture.
CheckResult run_check(const std::string& name, const SuiteOptions& options);

VerificationReport run_suite(const SuiteOptions& options);

}  // namespace qp
