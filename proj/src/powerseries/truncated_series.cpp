#include "pisl/powerseries/truncated_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace pisl {

TruncatedSeries::TruncatedSeries(long order) : order_(order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, BigRational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coeffs, long order) : c_(std::move(coeffs)), order_(order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  c_.resize(static_cast<std::size_t>(order) + 1, BigRational(0));
  for (auto& q : c_) q.canonicalize();
}

namespace {
void same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": order mismatch " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
}
}  // namespace

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  same_order(a, b, "ts_add");
  TruncatedSeries out(a);
  for (long i = 0; i <= a.order(); ++i) out[i] += b[i];
  return out;
}

TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  same_order(a, b, "ts_sub");
  TruncatedSeries out(a);
  for (long i = 0; i <= a.order(); ++i) out[i] -= b[i];
  return out;
}

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const long n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (long i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries ts_scale(const TruncatedSeries& a, const BigRational& s) {
  TruncatedSeries out(a);
  for (long i = 0; i <= a.order(); ++i) out[i] *= s;
  return out;
}

TruncatedSeries ts_shift(const TruncatedSeries& a, long k) {
  if (k < 0) throw std::invalid_argument("ts_shift: negative shift");
  TruncatedSeries out(a.order());
  for (long i = 0; i + k <= a.order(); ++i) out[i + k] = a[i];
  return out;
}

TruncatedSeries ts_inverse(const TruncatedSeries& a) {
  if (a[0] == 0) throw std::domain_error("ts_inverse: zero constant term");
  const long n = a.order();
  TruncatedSeries out(n);
  BigRational inv0 = 1 / a[0];
  out[0] = inv0;
  for (long i = 1; i <= n; ++i) {
    BigRational s = 0;
    for (long j = 1; j <= i; ++j) s += a[j] * out[i - j];
    out[i] = -s * inv0;
  }
  return out;
}

TruncatedSeries ts_inv_pow_1p4z(long e, long order) {
  if (e < 1) throw std::invalid_argument("ts_inv_pow_1p4z: e < 1");
  TruncatedSeries out(order);
  BigInt four_pow = 1;
  for (long r = 0; r <= order; ++r) {
    BigInt c = binomial(e - 1 + r, r) * four_pow;
    out[r] = BigRational(r % 2 == 0 ? c : BigInt(-c));
    four_pow *= 4;
  }
  return out;
}

TruncatedSeries ts_poly(const std::vector<BigRational>& coeffs, long order) { return TruncatedSeries(coeffs, order); }

std::string to_string(const TruncatedSeries& s) {
  std::string out;
  for (long i = 0; i <= s.order(); ++i) {
    if (i) out += ", ";
    out += to_string(s[i]);
  }
  return "[" + out + "] + O(z^" + std::to_string(s.order() + 1) + ")";
}

}  // namespace pisl
