#pragma once

// Big-float summation of exactly generated terms with an empirical geometric
// tail bound.
//
// Terms are grouped in blocks of `window`; M_j is the largest |term| in block j.
// The decay rate per term is estimated as (M_j / M_{j-4})^(1/(4 window)),
// taking the larger of the estimates at the two most recent blocks. Summation
// stops once M_last * r / (1 - r) < 10^(-digits-5), where r is the estimate
// inflated by `inflation` (capped at (1 + estimate) / 2). Oscillating terms
// make single-step ratios unreliable, which is why whole blocks are compared.

#include "pisl/closedform/bigfloat.hpp"
#include "pisl/series/entry.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace pisl::series {

class NonConvergent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SumOptions {
  long max_terms = 50000;
  long window = 10;
  double inflation = 1.05;
  double max_ratio = 0.98;
  /// Consecutive blocks with estimate above 1.02 before giving up early.
  long divergent_blocks = 20;
};

struct SumResult {
  BigFloat value;
  BigFloat tail;
  long terms = 0;
  /// Inflated per-term rate used for the tail bound.
  double rate = 0;
};

/// Sums term(0), term(1), ... to `digits` digits. Throws NonConvergent.
SumResult sum_terms(const std::function<BigRational(long)>& term, long digits, const SumOptions& opt = {});

/// Sums the left-hand side of `e`. The zero series returns 0 with one term.
SumResult sum_series(const SeriesEntry& e, long digits, const SumOptions& opt = {});

struct VerifyReport {
  std::string id;
  long digits = 0;
  long terms = 0;
  BigFloat sum;
  BigFloat rhs;
  BigFloat tail;
  BigFloat diff;
  bool pass = false;
};

/// pass iff |sum - rhs| + tail < 10^(-digits+5). Propagates NonConvergent.
VerifyReport verify_entry(const SeriesEntry& e, long digits, const SumOptions& opt = {});

}  // namespace pisl::series
