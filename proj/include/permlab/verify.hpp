#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace permlab {

struct CheckInfo {
  std::string name;
  std::string description;
  std::size_t bound = 0;  ///< largest size the property is stated for
};

struct CheckResult {
  std::string name;
  std::size_t n = 0;  ///< largest size actually checked
  bool passed = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  ///< first counterexample, if any
  double seconds = 0;
};

struct SuiteOptions {
  std::size_t n_max = 7;
  unsigned jobs = 1;
  /// Adds a spurious crossing to every permutation starting with 2. Used to
  /// confirm that the suite can fail.
  bool inject_fault = false;
};

/// Every registered property, in suite order.
const std::vector<CheckInfo>& identity_checks();

/// Runs one property at sizes up to min(bound, n_max). Throws
/// std::out_of_range for an unknown name.
CheckResult run_check(std::string_view name, const SuiteOptions& options);

std::vector<CheckResult> run_identity_suite(const SuiteOptions& options);

}  // namespace permlab
