#include "pisl/closedform/bigfloat.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace pisl {

long digits_to_bits(long digits) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 8;
}

void BigFloat::init(long digits) {
  digits_ = std::max(10L, digits);
  mpfr_init2(v_, digits_to_bits(digits_));
}

BigFloat::BigFloat(long digits) {
  init(digits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long digits) {
  init(digits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, long digits) {
  init(digits);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, long digits) {
  init(digits);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(const std::string& text, long digits) {
  BigFloat out(digits);
  char* end = nullptr;
  if (!text.empty()) mpfr_strtofr(out.v_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || *end != '\0') {
    throw std::invalid_argument("BigFloat::parse: malformed number '" + text + "'");
  }
  return out;
}

BigFloat::BigFloat(const BigFloat& o) {
  digits_ = o.digits_;
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  digits_ = o.digits_;
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    digits_ = o.digits_;
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  std::swap(digits_, o.digits_);
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_digits(long digits) const {
  BigFloat out(digits);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

namespace {
// Widens `self` to the precision of `o` before an in-place operation.
void widen(BigFloat& self, const BigFloat& o) {
  if (o.digits() > self.digits()) self = self.with_digits(o.digits());
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(*this, o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(*this, o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(*this, o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen(*this, o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  return out;
}

BigInt BigFloat::round() const {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), v_, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_string(long sig) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  sig = std::max(1L, sig);
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(sig), v_, MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string out;
  if (digits[0] == '-') {
    out = "-";
    digits.erase(0, 1);
  }
  out += digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

std::string BigFloat::to_fixed(long decimals) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*RNf", static_cast<int>(decimals), v_) < 0) throw std::runtime_error("BigFloat::to_fixed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

long BigFloat::log10_floor() const {
  if (is_zero()) return LONG_MIN;
  BigFloat a = abs(*this);
  BigFloat l(digits_);
  mpfr_log10(l.raw(), a.raw(), MPFR_RNDN);
  long guess = static_cast<long>(std::floor(l.to_double()));
  // correct the guess against exact powers of ten
  for (;;) {
    if (a < pow10(guess, digits_)) { --guess; continue; }
    if (a >= pow10(guess + 1, digits_)) { ++guess; continue; }
    return guess;
  }
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x);
  mpfr_abs(out.raw(), out.raw(), MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x.digits());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat root(const BigFloat& x, unsigned long k) {
  BigFloat out(x.digits());
  mpfr_rootn_ui(out.raw(), x.raw(), k, MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& x, long e) {
  BigFloat out(x.digits());
  mpfr_pow_si(out.raw(), x.raw(), e, MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& x, const BigFloat& e) {
  BigFloat out(std::max(x.digits(), e.digits()));
  mpfr_pow(out.raw(), x.raw(), e.raw(), MPFR_RNDN);
  return out;
}

BigFloat exp(const BigFloat& x) {
  BigFloat out(x.digits());
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat log(const BigFloat& x) {
  BigFloat out(x.digits());
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat pow10(long e, long digits) {
  BigFloat out(digits);
  mpfr_set_ui(out.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(out.raw(), out.raw(), e, MPFR_RNDN);
  return out;
}

}  // namespace pisl
