#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace permgen {

/// One verification check. `report_only` rows record a value without gating:
/// they cover asymptotic statements whose small-n behaviour is informative
/// but not a correctness criterion.
struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  bool report_only = false;
  nlohmann::json detail;

  nlohmann::json to_json() const;
};

struct VerifyLimits {
  unsigned chars_nmax = 10;        // orthogonality / table identities
  unsigned lambda_nmax = 40;       // closed form vs scan
  unsigned dim_bound_nmax = 300;   // dimension lower bounds (from 12)
  unsigned counting_mmax = 60;     // bounded-cycle inequality
  unsigned density_nmax = 400;     // density report
  int workers = 0;
};

std::vector<CheckResult> verify_chars(const VerifyLimits& limits = {});
std::vector<CheckResult> verify_lambda(const VerifyLimits& limits = {});
std::vector<CheckResult> verify_counting(const VerifyLimits& limits = {});
std::vector<CheckResult> verify_correlation(const VerifyLimits& limits = {});
std::vector<CheckResult> verify_all(const VerifyLimits& limits = {});

/// True iff every non-report-only check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace permgen
