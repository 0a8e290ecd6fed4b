#ifndef DCOPT_CHECKS_HPP
#define DCOPT_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dcopt {

// Built-in verification suites behind `check <name>` in the CLI: each one
// re-derives the quantity it guards from an independent route (finite
// differences, grid search, Monte-Carlo, closed-form constants) and reports
// the measured slack.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured slack / worst case
};

CheckResult check_gradient_fd(std::uint64_t seed);
CheckResult check_prox_oracle(std::uint64_t seed);
CheckResult check_page_variance(std::uint64_t seed);
CheckResult check_gap_example();
CheckResult check_budget_identity(std::uint64_t seed);

// name is one of the suites above or "all".
std::vector<CheckResult> run_check_suite(const std::string& name,
                                         std::uint64_t seed);

}  // namespace dcopt

#endif
