#pragma once

// Power series in z with exact rational coefficients, truncated at a fixed
// inclusive order.

#include "pisl/exact/bigint.hpp"

#include <string>
#include <vector>

namespace pisl {

class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(long order);
  /// Coefficients beyond `order` are dropped; missing ones are zero.
  TruncatedSeries(std::vector<BigRational> coeffs, long order);

  long order() const { return order_; }
  const std::vector<BigRational>& coefficients() const { return c_; }
  const BigRational& operator[](long i) const { return c_.at(static_cast<std::size_t>(i)); }
  BigRational& operator[](long i) { return c_.at(static_cast<std::size_t>(i)); }

  bool operator==(const TruncatedSeries& o) const = default;

 private:
  std::vector<BigRational> c_;
  long order_;
};

/// Throws std::invalid_argument when the orders differ.
TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b);
/// Product truncated to min(order(a), order(b)).
TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_scale(const TruncatedSeries& a, const BigRational& s);
/// z^k * a, same order.
TruncatedSeries ts_shift(const TruncatedSeries& a, long k);
/// Multiplicative inverse; throws std::domain_error when the constant term is 0.
TruncatedSeries ts_inverse(const TruncatedSeries& a);
/// (1 + 4z)^(-e) to the given order.
TruncatedSeries ts_inv_pow_1p4z(long e, long order);
/// Polynomial with the given coefficients.
TruncatedSeries ts_poly(const std::vector<BigRational>& coeffs, long order);

std::string to_string(const TruncatedSeries& s);

}  // namespace pisl
