#include "pisl/sequences/checks.hpp"

#include "pisl/closedform/pi.hpp"
#include "pisl/sequences/sequences.hpp"

#include <stdexcept>

namespace pisl::seq {

CheckReport check_f4_recurrence(long n_max) { return check_f4_recurrence(f4_table(n_max + 2), n_max); }

CheckReport check_f4_recurrence(const std::vector<BigInt>& f, long n_max) {
  if (n_max < 0) throw std::invalid_argument("check_f4_recurrence: n_max < 0");
  if (static_cast<long>(f.size()) < n_max + 3) throw std::invalid_argument("check_f4_recurrence: table too short");
  CheckReport r{"f4 recurrence", true, n_max, std::nullopt, ""};
  for (long n = 0; n <= n_max; ++n) {
    BigInt lhs = BigInt(n + 2) * (n + 2) * (n + 2) * f[n + 2];
    BigInt rhs = BigInt(4) * (n + 1) * (4 * n + 3) * (4 * n + 5) * f[n] +
                 BigInt(2) * (2 * n + 3) * (3 * n * n + 9 * n + 7) * f[n + 1];
    if (lhs != rhs) {
      r.pass = false;
      r.first_failure = n;
      r.detail = "mismatch at n=" + std::to_string(n);
      return r;
    }
  }
  r.detail = "holds for 0<=n<=" + std::to_string(n_max);
  return r;
}

BigInt s_identity_lhs(const std::vector<BigInt>& s, long n, long coef) {
  return BigInt(5) * n * (4 * n + 1) * (BigInt(n + 2) * s[n + 2] - BigInt(coef) * n * s[n]);
}

BigInt s_identity_rhs(const std::vector<BigInt>& f, long n) {
  BigInt a = BigInt(30) * n * n * n + 54 * n * n + 7 * n - 2;
  BigInt b = BigInt(60) * n * n * n + 58 * n * n + 17 * n + 2;
  return a * f[n + 1] + 2 * b * f[n];
}

SIdentityReport check_s_identity(long n_max) { return check_s_identity(f4_table(n_max + 2), s_table(n_max + 2), n_max); }

SIdentityReport check_s_identity(const std::vector<BigInt>& f, const std::vector<BigInt>& s, long n_max) {
  if (n_max < 2) throw std::invalid_argument("check_s_identity: n_max < 2");
  if (static_cast<long>(f.size()) < n_max + 2 || static_cast<long>(s.size()) < n_max + 3) {
    throw std::invalid_argument("check_s_identity: table too short");
  }
  SIdentityReport out;
  out.check = CheckReport{"s_n / f4 identity", true, n_max, std::nullopt, ""};
  bool holds16 = true, holds1 = true;
  for (long n = 0; n <= n_max; ++n) {
    BigInt rhs = s_identity_rhs(f, n);
    BigInt lhs16 = s_identity_lhs(s, n, 16);
    if (n <= 2) out.anchors.push_back(lhs16);
    if (lhs16 != rhs) {
      if (holds16) out.check.first_failure = n;
      holds16 = false;
    }
    if (s_identity_lhs(s, n, 1) != rhs) holds1 = false;
  }
  out.coefficient_resolution = holds16 ? (holds1 ? "both" : "16n") : (holds1 ? "n" : "neither");
  out.anchors_match = out.anchors.size() == 3 && out.anchors[0] == 0 && out.anchors[1] == 2150 && out.anchors[2] == 103680;
  out.check.pass = holds16 && out.anchors_match;
  out.check.detail = "coefficient " + out.coefficient_resolution + "; u0,u1,u2 = " + to_string(out.anchors[0]) + "," +
                     to_string(out.anchors[1]) + "," + to_string(out.anchors[2]);
  return out;
}

BigFloat laplace_heine_ratio(long n, long digits) {
  if (n < 1) throw std::invalid_argument("laplace_heine_ratio: n < 1");
  const long wp = digits + 20;
  BigFloat p(legendreP(n, BigRational(2)), wp);
  BigFloat three(3, wp);
  BigFloat base = BigFloat(2, wp) + sqrt(three);
  BigFloat expo = BigFloat(BigRational(2 * n + 1, 2), wp);
  BigFloat asym = pow(base, expo) / (sqrt(BigFloat(2 * n, wp) * pi(wp)) * root(three, 4));
  return (p / asym).with_digits(digits);
}

ThresholdReport convergence_threshold(long search_max, long span) {
  if (search_max < 1 || span < 0) throw std::invalid_argument("convergence_threshold: bad range");
  const long top = search_max + span;
  std::vector<char> holds(static_cast<std::size_t>(top) + 1, 0);
  BigRational prev = 1, cur = 2;
  BigInt eight_pow = 8, thirty_pow = 30;
  ThresholdReport rep;
  rep.span = span;
  for (long n = 1; n <= top; ++n) {
    if (n > 1) {
      BigRational next = (BigRational(2 * n - 1) * 2 * cur - BigRational(n - 1) * prev) / BigRational(n);
      prev = std::move(cur);
      cur = std::move(next);
      eight_pow *= 8;
      thirty_pow *= 30;
    }
    // n 8^n P_n(2) < 30^n  <=>  n 8^n num < 30^n den
    holds[n] = BigInt(n) * eight_pow * cur.get_num() < thirty_pow * cur.get_den();
    if (!holds[n]) rep.last_failure = n;
  }
  long run = 0;
  for (long n = top; n >= 1; --n) {
    run = holds[n] ? run + 1 : 0;
    if (n <= search_max && run >= span + 1) {
      rep.found = true;
      rep.N = n;
    }
  }
  return rep;
}

}  // namespace pisl::seq
