#include "pisl/sequences/sequences.hpp"

#include <stdexcept>
#include <string>

namespace pisl::seq {
namespace {

void require_nonneg(long n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index");
}

// Row n of Pascal's triangle, exact.
std::vector<BigInt> pascal_row(long n) {
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (long k = 0; k < n; ++k) {
    row[k + 1] = row[k] * (n - k);
    mpz_divexact_ui(row[k + 1].get_mpz_t(), row[k + 1].get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
  return row;
}

}  // namespace

std::vector<BigInt> w_coefficients(long n) {
  require_nonneg(n, "w_coefficients");
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[0] = binomial(2 * n, n);
  // c_{j+1}/c_j = (n-j)^2 (n+j+1) (2j+1) / ((j+1)^3 (2n-2j-1))
  for (long j = 0; j < n; ++j) {
    BigInt v = c[j];
    v *= (n - j);
    v *= (n - j);
    v *= (n + j + 1);
    v *= (2 * j + 1);
    BigInt den = BigInt(j + 1) * (j + 1) * (j + 1) * (2 * n - 2 * j - 1);
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), den.get_mpz_t());
    c[j + 1] = std::move(v);
  }
  return c;
}

BigRational eval_poly(const std::vector<BigInt>& coeff, const BigRational& x) {
  // Horner on numerator/denominator separately: sum c_j u^j v^(n-j) / v^n.
  if (coeff.empty()) return 0;
  const BigInt& u = x.get_num();
  const BigInt& v = x.get_den();
  std::size_t n = coeff.size() - 1;
  BigInt acc = coeff[n];
  BigInt vpow = 1;
  for (std::size_t j = n; j-- > 0;) {
    vpow *= v;
    acc = acc * u + coeff[j] * vpow;
  }
  BigRational out(acc, vpow);
  out.canonicalize();
  return out;
}

BigRational w_fast(long n, const BigRational& x) {
  require_nonneg(n, "w_fast");
  // d_j = c_j u^j v^(n-j) with x = u/v; W_n(x) = sum d_j / v^n.
  const BigInt& u = x.get_num();
  const BigInt& v = x.get_den();
  BigInt vn = pow(v, static_cast<unsigned long>(n));
  BigInt d = binomial(2 * n, n) * vn;
  BigInt total = d;
  BigInt den;
  for (long j = 0; j < n && d != 0; ++j) {
    d *= (n - j);
    d *= (n - j);
    d *= (n + j + 1);
    d *= (2 * j + 1);
    d *= u;
    den = BigInt(j + 1) * (j + 1) * (j + 1) * (2 * n - 2 * j - 1) * v;
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    total += d;
  }
  BigRational out(total, vn);
  out.canonicalize();
  return out;
}

BigRational w_eval(long n, const BigRational& x) {
  BigRational first = w_fast(n, x);
  std::vector<BigInt> second(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    BigInt c = binomial(2 * k, k);
    second[k] = binomial(n + k, 2 * k) * c * c * binomial(2 * (n - k), n - k);
  }
  if (eval_poly(second, x) != first) {
    throw std::logic_error("w_eval: the two forms of W_" + std::to_string(n) + " disagree");
  }
  return first;
}

BigInt f4(long n) {
  require_nonneg(n, "f4");
  BigInt s = 0;
  for (const auto& c : pascal_row(n)) {
    BigInt sq = c * c;
    s += sq * sq;
  }
  return s;
}

std::vector<BigInt> f4_table(long n_max) {
  require_nonneg(n_max, "f4_table");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) out.push_back(f4(n));
  return out;
}

BigInt franel(long n) {
  require_nonneg(n, "franel");
  BigInt s = 0;
  for (const auto& c : pascal_row(n)) s += c * c * c;
  return s;
}

BigInt s_seq(long n) {
  require_nonneg(n, "s_seq");
  if (n == 0) return 0;
  const long m = n - 1;
  BigInt s = 0;
  for (long j = 0; j <= m; ++j) {
    BigInt t = binomial(m, j) * binomial(n + j, j) * binomial(2 * j, j) * binomial(2 * (m - j), m - j);
    if ((m - j) % 2 == 0) s += t; else s -= t;
  }
  return s;
}

std::vector<BigInt> s_table(long n_max) {
  require_nonneg(n_max, "s_table");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) out.push_back(s_seq(n));
  return out;
}

BigRational S_poly(long n, const BigRational& x) {
  require_nonneg(n, "S_poly");
  std::vector<BigInt> coeff = pascal_row(n);
  for (auto& c : coeff) {
    BigInt sq = c * c;
    c = sq * sq;
  }
  return eval_poly(coeff, x);
}

BigInt T_tri(long n, const BigInt& b, const BigInt& c) {
  require_nonneg(n, "T_tri");
  if (b == 0) {
    if (n % 2) return 0;
    return binomial(n, n / 2) * pow(c, static_cast<unsigned long>(n / 2));
  }
  // e_k = C(n,2k) C(2k,k) b^(n-2k) c^k; e_{k+1}/e_k = (n-2k)(n-2k-1) c / ((k+1)^2 b^2)
  BigInt e = pow(b, static_cast<unsigned long>(n));
  BigInt s = e;
  const BigInt b2 = b * b;
  BigInt den;
  for (long k = 0; 2 * k + 2 <= n && e != 0; ++k) {
    e *= (n - 2 * k);
    e *= (n - 2 * k - 1);
    e *= c;
    den = BigInt(k + 1) * (k + 1) * b2;
    mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), den.get_mpz_t());
    s += e;
  }
  return s;
}

BigRational F_poly(long n, const BigRational& x) {
  require_nonneg(n, "F_poly");
  // g_k = C(n,k) C(n+2k,2k) C(2k,k) u^(n-k) v^k with x = u/v; F_n(x) = sum g_k / v^n.
  const BigInt& u = x.get_num();
  const BigInt& v = x.get_den();
  BigInt vn = pow(v, static_cast<unsigned long>(n));
  BigInt total;
  if (u == 0) {
    total = binomial(3 * n, 2 * n) * binomial(2 * n, n);
  } else {
    BigInt g = pow(u, static_cast<unsigned long>(n));
    total = g;
    BigInt den;
    for (long k = 0; k < n; ++k) {
      g *= (n - k);
      g *= (n + 2 * k + 1);
      g *= (n + 2 * k + 2);
      g *= v;
      den = BigInt(k + 1) * (k + 1) * (k + 1) * u;
      mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
      total += g;
    }
  }
  BigRational out(total, vn);
  out.canonicalize();
  return out;
}

BigRational legendreP_sum(long n, const BigRational& x) {
  require_nonneg(n, "legendreP");
  std::vector<BigInt> coeff(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) coeff[k] = binomial(n, k) * binomial(n + k, k);
  return eval_poly(coeff, BigRational((x - 1) / 2));
}

BigRational legendreP(long n, const BigRational& x) {
  require_nonneg(n, "legendreP");
  if (n <= 30) return legendreP_sum(n, x);
  BigRational prev = 1, cur = x;
  for (long k = 1; k < n; ++k) {
    BigRational next = (BigRational(2 * k + 1) * x * cur - BigRational(k) * prev) / BigRational(k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace pisl::seq
