#pragma once

#include "pisl/congruence/checks.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pisl::cong {

struct SweepOptions {
  std::int64_t lo = 3;
  std::int64_t hi = 300;
  std::vector<long> lift_n{1, 2};
  /// 0: every applicable prime in range; otherwise the k smallest.
  int lift_primes = 0;
  long cost_cap = 400;
  long div_n_max = 40;
  long parity_n_max = 64;
  int threads = 0;  // 0: default_threads()
};

/// $PI_SERIES_LAB_THREADS if set, else the hardware concurrency.
int default_threads();

/// Runs every selected claim; results sorted by (claim, p, n).
std::vector<CheckResult> run_sweep(const std::vector<const Claim*>& claims, const SweepOptions& opt);

struct SweepSummary {
  std::size_t pass = 0, fail = 0, skip = 0, error = 0;
  /// Failures or errors of primary claims; these fail a run.
  std::size_t gating_failures = 0;
  /// Failures or errors of alternate readings; informational.
  std::size_t alternate_failures = 0;
};

SweepSummary summarize(const std::vector<CheckResult>& results);

void write_jsonl(std::ostream& out, const std::vector<CheckResult>& results);

/// Case-table audit: for each claim with more than one case and each
/// admissible p in [lo, hi], exactly one case applies (ramified primes are
/// counted separately) and every applicable form is representable.
struct AuditReport {
  std::size_t checked = 0;
  std::size_t ramified = 0;
  std::vector<std::string> problems;
};

AuditReport audit_tables(const std::vector<const Claim*>& claims, std::int64_t lo, std::int64_t hi);

}  // namespace pisl::cong
