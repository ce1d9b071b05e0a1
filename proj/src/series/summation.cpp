#include "pisl/series/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace pisl::series {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log10_abs(const BigFloat& x) {
  if (x.is_zero()) return kNegInf;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, x.raw(), MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
}

}  // namespace

SumResult sum_terms(const std::function<BigRational(long)>& term, long digits, const SumOptions& opt) {
  if (digits < 1) throw std::invalid_argument("sum_terms: digits < 1");
  if (opt.window < 1) throw std::invalid_argument("sum_terms: window < 1");
  const long wp = digits + 40;
  const double target = -static_cast<double>(digits) - 5.0;
  const double span = 4.0 * static_cast<double>(opt.window);

  BigFloat sum(wp);
  std::vector<double> block_max;  // log10 of the largest |term| per block
  double current = kNegInf;
  long divergent_run = 0;

  for (long k = 0; k < opt.max_terms; ++k) {
    BigFloat t(term(k), wp);
    sum += t;
    current = std::max(current, log10_abs(t));
    if ((k + 1) % opt.window != 0) continue;

    block_max.push_back(current);
    current = kNegInf;
    const std::size_t j = block_max.size() - 1;
    if (j < 5) continue;

    bool all_zero = true;
    for (std::size_t i = j - 4; i <= j; ++i) all_zero = all_zero && block_max[i] == kNegInf;
    if (all_zero) return SumResult{sum.with_digits(digits + 10), BigFloat(digits), k + 1, 0.0};

    auto estimate = [&](std::size_t i) {
      if (block_max[i] == kNegInf) return 0.0;
      if (block_max[i - 4] == kNegInf) return std::numeric_limits<double>::infinity();
      return std::pow(10.0, (block_max[i] - block_max[i - 4]) / span);
    };
    const double raw = std::max(estimate(j), estimate(j - 1));
    divergent_run = raw > 1.02 ? divergent_run + 1 : 0;
    if (divergent_run >= opt.divergent_blocks) {
      throw NonConvergent("sum_terms: term ratio stays above 1.02 (estimate " + std::to_string(raw) + ")");
    }
    if (!(raw < opt.max_ratio)) continue;

    const double rate = std::min(raw * opt.inflation, (1.0 + raw) / 2.0);
    const double last = block_max[j];
    const double log_tail = last == kNegInf ? kNegInf : last + std::log10(rate / (1.0 - rate));
    if (log_tail < target) {
      BigFloat tail(digits + 10);
      if (log_tail != kNegInf) {
        mpfr_set_d(tail.raw(), log_tail, MPFR_RNDU);
        tail = pow(BigFloat(10, digits + 10), tail);
      }
      return SumResult{sum.with_digits(digits + 10), tail, k + 1, rate};
    }
  }
  throw NonConvergent("sum_terms: no stable ratio below " + std::to_string(opt.max_ratio) + " within " +
                      std::to_string(opt.max_terms) + " terms");
}

SumResult sum_series(const SeriesEntry& e, long digits, const SumOptions& opt) {
  if (e.a == 0 && e.b == 0) return SumResult{BigFloat(digits + 10), BigFloat(digits + 10), 1, 0.0};
  if (e.base == 0) throw std::domain_error("sum_series: base 0");
  // powers of 1/base are carried along instead of recomputed
  BigRational inv_base = 1 / e.base;
  BigRational scale = 1;
  long next = 0;
  auto term = [&](long k) {
    if (k != next) throw std::logic_error("sum_series: terms requested out of order");
    BigRational v = BigRational(e.a * k + e.b) * term_value(e.term, k) * scale;
    scale *= inv_base;
    ++next;
    return v;
  };
  return sum_terms(term, digits, opt);
}

VerifyReport verify_entry(const SeriesEntry& e, long digits, const SumOptions& opt) {
  SumResult s = sum_series(e, digits, opt);
  VerifyReport r;
  r.id = e.id;
  r.digits = digits;
  r.terms = s.terms;
  r.sum = s.value;
  r.rhs = eval_expr(e.rhs, digits + 20);
  r.tail = s.tail;
  r.diff = abs(s.value - r.rhs);
  r.pass = (r.diff + r.tail) < pow10(-digits + 5, digits + 10);
  return r;
}

}  // namespace pisl::series
