#pragma once

// Arbitrary-precision binary floating point (MPFR), round-to-nearest.
// Precision is specified in decimal digits (at least 10). Binary operations
// produce a result at the larger of the two operand precisions.

#include "pisl/exact/bigint.hpp"

#include <mpfr.h>

#include <string>

namespace pisl {

class BigFloat {
 public:
  explicit BigFloat(long digits = 50);
  BigFloat(long value, long digits);
  BigFloat(const BigInt& value, long digits);
  BigFloat(const BigRational& value, long digits);
  /// Decimal text such as "3.14159" or "-1e-40"; throws std::invalid_argument.
  static BigFloat parse(const std::string& text, long digits);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long digits() const { return digits_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  /// Same value rounded to a new precision.
  BigFloat with_digits(long digits) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.compare(b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.compare(b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.compare(b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.compare(b) >= 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Nearest integer.
  BigInt round() const;
  /// Scientific notation with `sig` significant digits, e.g. "2.20877e1".
  std::string to_string(long sig) const;
  std::string to_string() const { return to_string(digits_); }
  /// Fixed notation with `decimals` digits after the point.
  std::string to_fixed(long decimals) const;
  /// floor(log10 |x|); LONG_MIN for zero.
  long log10_floor() const;

 private:
  void init(long digits);
  mpfr_t v_;
  long digits_ = 0;
};

long digits_to_bits(long digits);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
/// Real k-th root; for odd k negative inputs give negative roots.
BigFloat root(const BigFloat& x, unsigned long k);
BigFloat pow(const BigFloat& x, long e);
BigFloat pow(const BigFloat& x, const BigFloat& e);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);
/// 10^e at the given precision.
BigFloat pow10(long e, long digits);

}  // namespace pisl
