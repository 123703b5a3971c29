#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qmc/sequences.hpp"

namespace qmc::cli {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string group;
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::fail) == 0; }
  void append(const VerifyReport& other);
};

struct VerifyOptions {
  ComputeOptions compute;
  /// Largest n for the cross-route comparisons.
  std::size_t cross_max_n = 10;
  std::vector<std::int64_t> cross_q{2, 3, 4, 5};
  bool run_oracle = true;
};

/// Every embedded reference value against the library.
VerifyReport regression_checks(const VerifyOptions& opts = {});
/// Independent formulas for the same count must agree exactly.
VerifyReport cross_route_checks(const VerifyOptions& opts = {});
/// Exhaustive enumeration against the generating functions for small q and n.
VerifyReport oracle_checks(const VerifyOptions& opts = {});

VerifyReport run_verify(const VerifyOptions& opts = {});

std::string format_report(const VerifyReport& report, bool verbose);

}  // namespace qmc::cli
