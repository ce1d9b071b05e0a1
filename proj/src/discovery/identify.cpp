#include "pisl/discovery/identify.hpp"

#include "pisl/closedform/pi.hpp"
#include "pisl/series/summation.hpp"

namespace pisl::disc {

std::pair<BigInt, BigInt> square_part(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("square_part: n must be positive");
  BigInt rest = n, f = 1;
  for (unsigned long p = 2; p <= 1000000; ++p) {
    const BigInt pp = BigInt(p) * p;
    if (pp > rest) break;
    while (rest % pp == 0) {
      rest /= pp;
      f *= p;
    }
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    f *= r;
    rest = 1;
  }
  return {f, rest};
}

AlgebraicExpr radical_over_pi(const BigRational& r, const BigInt& s) {
  using E = AlgebraicExpr;
  BigRational q = r;
  q.canonicalize();
  E num = E::literal(BigRational(q.get_num()));
  if (s != 1) num = q.get_num() == 1 ? E::sqrt(E::literal(BigRational(s))) : E::mul(num, E::sqrt(E::literal(BigRational(s))));
  E den = q.get_den() == 1 ? E::pi() : E::mul(E::literal(BigRational(q.get_den())), E::pi());
  return E::div(num, den);
}

namespace {

using E = AlgebraicExpr;

bool matches(const AlgebraicExpr& e, const BigFloat& S, long digits) {
  try {
    BigFloat v = eval_expr(e, digits);
    BigFloat scale = max(abs(S), BigFloat(1, digits));
    return abs(v - S) < scale * pow10(-digits + 15, digits);
  } catch (const std::domain_error&) {
    return false;
  }
}

// q with v = q, from a relation on [1, v].
std::optional<BigRational> rational_of(const BigFloat& v, long digits, const BigInt& norm) {
  auto rel = pslq({BigFloat(1, digits), v}, digits, norm);
  if (!rel || rel->coefficients[1] == 0) return std::nullopt;
  BigRational q(-rel->coefficients[0], rel->coefficients[1]);
  q.canonicalize();
  return q;
}

// (alpha, beta) with v = alpha + beta sqrt(d).
std::optional<std::pair<BigRational, BigRational>> quadratic_of(const BigFloat& v, long d, long digits, const BigInt& norm) {
  const BigFloat rd = sqrt(BigFloat(d, digits));
  auto rel = pslq({BigFloat(1, digits), rd, v}, digits, norm);
  if (!rel || rel->coefficients[2] == 0) return std::nullopt;
  BigRational alpha(-rel->coefficients[0], rel->coefficients[2]);
  BigRational beta(-rel->coefficients[1], rel->coefficients[2]);
  alpha.canonicalize();
  beta.canonicalize();
  return std::make_pair(alpha, beta);
}

E linear_in_sqrt(const BigRational& alpha, const BigRational& beta, long d) {
  E rad = E::sqrt(E::literal(BigRational(d)));
  if (beta == 0) return E::literal(alpha);
  E b = beta == 1 ? rad : E::mul(E::literal(beta), rad);
  return alpha == 0 ? b : E::add(E::literal(alpha), b);
}

}  // namespace

std::optional<AlgebraicExpr> identify_series(const BigFloat& S, const IdentifyOptions& opt) {
  const long digits = S.digits();
  if (digits < 60) throw PrecisionTooLow("identify_series: needs at least 60 digits");
  if (S.is_zero()) return E::literal(BigRational(0));
  const BigFloat piS = pi(digits) * S;
  const int sign = S.sign();

  // (pi S)^2 = q
  if (auto q = rational_of(piS * piS, digits, opt.max_norm); q && *q > 0) {
    BigInt num = q->get_num(), den = q->get_den();
    auto [f, s] = square_part(num * den);
    E e = radical_over_pi(BigRational(BigInt(sign * f), den), s);
    if (matches(e, S, digits)) return e;
  }
  // pi S sqrt(d) = q
  for (long d : opt.d_candidates) {
    if (auto q = rational_of(piS * sqrt(BigFloat(d, digits)), digits, opt.max_norm)) {
      E e = radical_over_pi(*q / d, BigInt(d));
      if (matches(e, S, digits)) return e;
    }
  }
  // pi S = alpha + beta sqrt(d)
  for (long d : opt.d_candidates) {
    if (d == 1) continue;
    if (auto ab = quadratic_of(piS, d, digits, opt.max_norm)) {
      E e = E::div(linear_in_sqrt(ab->first, ab->second, d), E::pi());
      if (matches(e, S, digits)) return e;
    }
  }
  if (opt.quartic) {
    // (pi S)^2 = alpha + beta sqrt(d)
    for (long d : opt.d_candidates) {
      if (d == 1) continue;
      if (auto ab = quadratic_of(piS * piS, d, digits, opt.max_norm)) {
        E r = E::sqrt(linear_in_sqrt(ab->first, ab->second, d));
        E e = E::div(sign < 0 ? E::negate(r) : r, E::pi());
        if (matches(e, S, digits)) return e;
      }
    }
  }
  return std::nullopt;
}

MomentSums moment_sums(const series::TermKind& kind, const BigRational& m, long digits) {
  if (m == 0) throw std::invalid_argument("moment_sums: m = 0");
  const long wp = digits + 10;
  auto weighted = [&](bool with_k) {
    const BigRational inv = 1 / m;
    BigRational scale = 1;
    long next = 0;
    auto term = [&, with_k](long k) {
      if (k != next++) throw std::logic_error("moment_sums: terms requested out of order");
      BigRational v = series::term_value(kind, k) * scale;
      scale *= inv;
      return with_k ? BigRational(v * k) : v;
    };
    return series::sum_terms(term, wp).value.with_digits(wp);
  };
  return MomentSums{weighted(true), weighted(false)};
}

double ratio_estimate(const series::TermKind& kind, const BigRational& m, long k0, long k1) {
  if (k1 <= k0) throw std::invalid_argument("ratio_estimate: k1 <= k0");
  const BigRational t0 = series::term_value(kind, k0), t1 = series::term_value(kind, k1);
  if (t0 == 0 || t1 == 0) return 0.0;
  const long wp = 30;
  BigFloat r = abs(BigFloat(BigRational(t1 / t0), wp));
  r = pow(r, BigFloat(BigRational(1, k1 - k0), wp));
  return (r / abs(BigFloat(m, wp))).to_double();
}

std::optional<SearchResult> search_ab(const MomentSums& sums, long d, long digits, const BigInt& max_norm) {
  if (d < 1) throw std::invalid_argument("search_ab: d must be positive");
  const long wp = digits + 10;
  const BigFloat w = pi(wp) * sqrt(BigFloat(d, wp));
  auto rel = pslq({(sums.A1 * w).with_digits(digits), (sums.A0 * w).with_digits(digits), BigFloat(1, digits)}, digits,
                  max_norm);
  if (!rel) return std::nullopt;
  BigInt a = rel->coefficients[0], b = rel->coefficients[1], r3 = rel->coefficients[2];
  if (a == 0 && b == 0) return std::nullopt;
  BigInt g = gcd(a, b);
  if (a < 0 || (a == 0 && b < 0)) g = -g;
  a /= g;
  b /= g;
  BigRational q(-r3, g);
  q.canonicalize();
  E C = radical_over_pi(q / d, BigInt(d));
  // sum (a k + b) t_k / m^k = q / (pi sqrt(d))
  BigFloat lhs = BigFloat(a, wp) * sums.A1 + BigFloat(b, wp) * sums.A0;
  if (!matches(C, lhs.with_digits(digits), digits)) return std::nullopt;
  return SearchResult{a, b, C, *rel};
}

std::optional<SearchResult> search_ab(const series::TermKind& kind, const BigRational& m, long d, long digits,
                                      const BigInt& max_norm) {
  if (d < 1) throw std::invalid_argument("search_ab: d must be positive");
  return search_ab(moment_sums(kind, m, digits), d, digits, max_norm);
}

}  // namespace pisl::disc
