#include "pisl/exact/bigint.hpp"

#include <stdexcept>

namespace pisl {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

BigInt pow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

BigRational pow(const BigRational& q, long e) {
  if (e >= 0) {
    BigRational r(pow(BigInt(q.get_num()), static_cast<unsigned long>(e)),
                  pow(BigInt(q.get_den()), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
  }
  if (q == 0) throw std::domain_error("zero to a negative power");
  auto ue = static_cast<unsigned long>(-e);
  return make_rational(pow(BigInt(q.get_den()), ue), pow(BigInt(q.get_num()), ue));
}

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n < 0");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long log10_floor(const BigRational& q) {
  if (q == 0) throw std::domain_error("log10 of zero");
  // sizeinbase over-estimates by at most one digit; refine by comparison.
  BigInt num = abs(q.get_num());
  const BigInt& den = q.get_den();
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  BigRational aq = abs(q);
  for (;;) {
    BigRational lo = pow(BigRational(10), e);
    if (aq < lo) { --e; continue; }
    if (aq >= lo * 10) { ++e; continue; }
    return e;
  }
}

}  // namespace pisl
