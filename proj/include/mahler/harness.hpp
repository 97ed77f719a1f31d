#pragma once

// Named verification suites: each check compares two independently computed
// quantities and records the outcome.

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mahler/measures.hpp"
#include "mahler/precision.hpp"
#include "mahler/real.hpp"

namespace mahler {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string check_id;
  std::string lhs;
  std::string rhs;
  std::string abs_diff;
  std::string tolerance;
  CheckStatus status = CheckStatus::fail;
  long wall_time_ms = 0;
};

struct SuiteConfig {
  int digits = 30;
  std::vector<std::string> suites;  // empty means all
  std::vector<double> k_grid{0.5, 1, 2, 3, 3.5};
  std::vector<double> v_grid{1.05, 1.10, 1.15, 1.20, 1.25, 1.30, 1.35, 1.40};
  std::vector<double> u_grid{2.5, 3, 4, 5, 7, 10};
  int tau_samples = 10;
  std::optional<std::filesystem::path> coeff_cache;
  int threads = 0;  // 0: hardware concurrency

  /// Throws DomainError describing the first invalid field.
  void validate() const;
};

struct SuiteInfo {
  std::string name;
  std::string claim;
};
const std::vector<SuiteInfo>& suite_registry();

/// The checks of one suite in check_id order. Throws UnknownSuite.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& config);
/// All configured suites, checks spread over a thread pool, sorted by check_id.
std::vector<CheckResult> run_suites(const SuiteConfig& config);

bool all_passed(const std::vector<CheckResult>& results);

/// {"config": {...}, "results": [...]}. With `timing` off every wall_time_ms
/// is written as 0 so reports are byte-identical across runs.
nlohmann::json report_json(const std::vector<CheckResult>& results, const SuiteConfig& config,
                           bool timing);

/// Midpoint rule for the torus average of log|P| on a grid x grid lattice, in
/// double precision. Throws SingularNode when a node lands on a zero of P.
Real brute_force_mahler_oracle(const FamilyParams& p, int grid);

}  // namespace mahler
