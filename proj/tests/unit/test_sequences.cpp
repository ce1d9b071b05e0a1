#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pisl/exact/bigint.hpp"
#include "pisl/sequences/checks.hpp"
#include "pisl/sequences/sequences.hpp"

using namespace pisl;

namespace {

BigRational w_direct(long n, const BigRational& x) {
  BigRational s = 0;
  for (long k = 0; k <= n; ++k) {
    s += BigRational(binomial(n, k) * binomial(n + k, k) * binomial(2 * k, k) * binomial(2 * (n - k), n - k)) *
         pow(x, k);
  }
  return s;
}

BigInt f4_direct(long n) {
  BigInt s = 0;
  for (long k = 0; k <= n; ++k) s += pow(binomial(n, k), 4);
  return s;
}

// Coefficient of x^n in (x^2 + b x + c)^n by repeated polynomial multiplication.
BigInt trinomial_direct(long n, const BigInt& b, const BigInt& c) {
  std::vector<BigInt> poly{1};
  for (long i = 0; i < n; ++i) {
    std::vector<BigInt> next(poly.size() + 2, BigInt(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += c * poly[j];
      next[j + 1] += b * poly[j];
      next[j + 2] += poly[j];
    }
    poly = std::move(next);
  }
  return poly[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("W_n: both forms agree and match the defining sum") {
  const BigRational xs[] = {BigRational(-1), BigRational(9, 10), BigRational(16, 15), BigRational(-49, 12),
                            BigRational(1444, 1445)};
  for (const auto& x : xs) {
    for (long n = 0; n <= 60; ++n) {
      const BigRational w = seq::w_eval(n, x);
      REQUIRE(w == w_direct(n, x));
      REQUIRE(w == seq::w_fast(n, x));
    }
  }
  const auto c = seq::w_coefficients(3);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == 20);  // C(6,3)
  CHECK(seq::w_eval(1, BigRational(9, 10)) == BigRational(2) + make_rational(BigInt(4 * 9), BigInt(10)));
}

TEST_CASE("(-1)^n W_n(-1) = f4(n)") {
  for (long n = 0; n <= 200; ++n) {
    BigRational w = seq::w_fast(n, BigRational(-1));
    if (n % 2) w = -w;
    REQUIRE(w == BigRational(seq::f4(n)));
  }
}

TEST_CASE("Franel numbers of both orders") {
  const long f3[] = {1, 2, 10, 56, 346, 2252};
  const long f4[] = {1, 2, 18, 164, 1810, 21252};
  for (long n = 0; n < 6; ++n) {
    CHECK(seq::franel(n) == f3[n]);
    CHECK(seq::f4(n) == f4[n]);
  }
  const auto t = seq::f4_table(120);
  for (long n = 0; n <= 120; ++n) REQUIRE(t[static_cast<std::size_t>(n)] == f4_direct(n));
  // (n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8n^2 f_{n-1}
  for (long n = 1; n <= 300; ++n) {
    REQUIRE((n + 1) * (n + 1) * seq::franel(n + 1) ==
            (7 * n * n + 7 * n + 2) * seq::franel(n) + 8 * n * n * seq::franel(n - 1));
  }
}

TEST_CASE("F_n(-4) = franel(n)") {
  for (long n = 0; n <= 200; ++n) REQUIRE(seq::F_poly(n, BigRational(-4)) == BigRational(seq::franel(n)));
}

TEST_CASE("S_n(1) = f4(n)") {
  for (long n = 0; n <= 100; ++n) REQUIRE(seq::S_poly(n, BigRational(1)) == BigRational(seq::f4(n)));
}

TEST_CASE("T_n(b, c) against polynomial expansion") {
  const std::pair<long, long> params[] = {{14, 1}, {17, 16}, {2, 81}, {14, 81}, {8, -2}, {1, 1}};
  for (auto [b, c] : params) {
    for (long n = 0; n <= 25; ++n) REQUIRE(seq::T_tri(n, BigInt(b), BigInt(c)) == trinomial_direct(n, BigInt(b), BigInt(c)));
  }
  const long central[] = {1, 1, 3, 7, 19, 51, 141};
  for (long n = 0; n < 7; ++n) CHECK(seq::T_tri(n, BigInt(1), BigInt(1)) == central[n]);
}

TEST_CASE("s_n from its definition; s_0 = 0") {
  CHECK(seq::s_seq(0) == 0);
  const auto t = seq::s_table(40);
  for (long n = 1; n <= 40; ++n) {
    BigInt s = 0;
    for (long j = 0; j < n; ++j) {
      BigInt term = binomial(n - 1, j) * binomial(n + j, j) * binomial(2 * j, j) * binomial(2 * (n - 1 - j), n - 1 - j);
      s += ((n - 1 - j) % 2) ? BigInt(-term) : term;
    }
    REQUIRE(t[static_cast<std::size_t>(n)] == s);
    REQUIRE(seq::s_seq(n) == s);
  }
}

TEST_CASE("Legendre polynomials") {
  const BigRational x(2);
  for (long n = 0; n <= 60; ++n) REQUIRE(seq::legendreP(n, x) == seq::legendreP_sum(n, x));
  // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
  for (long n = 1; n <= 100; ++n) {
    REQUIRE(BigRational(n + 1) * seq::legendreP(n + 1, x) ==
            BigRational(2 * n + 1) * x * seq::legendreP(n, x) - BigRational(n) * seq::legendreP(n - 1, x));
  }
  for (long n = 0; n <= 20; ++n) CHECK(seq::legendreP(n, BigRational(1)) == 1);
  CHECK(seq::legendreP(2, BigRational(1, 2)) == BigRational(-1, 8));
  CHECK(seq::eval_poly({BigInt(1), BigInt(2), BigInt(3)}, BigRational(2)) == 17);
}

TEST_CASE("f4 recurrence and its fault detection") {
  const auto ok = seq::check_f4_recurrence(500);
  CHECK(ok.pass);
  CHECK(ok.n_max == 500);
  auto table = seq::f4_table(502);
  table[40] += 1;
  const auto bad = seq::check_f4_recurrence(table, 500);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.first_failure.has_value());
  CHECK(*bad.first_failure == 38);
}

TEST_CASE("s_n / f4 identity with the 16n coefficient") {
  const auto r = seq::check_s_identity(300);
  CHECK(r.check.pass);
  CHECK(r.coefficient_resolution == "16n");
  REQUIRE(r.anchors.size() == 3);
  CHECK(r.anchors[0] == 0);
  CHECK(r.anchors[1] == 2150);
  CHECK(r.anchors[2] == 103680);
  CHECK(r.anchors_match);
  const auto f4 = seq::f4_table(302);
  const auto s = seq::s_table(302);
  for (long n = 0; n <= 300; ++n) REQUIRE(seq::s_identity_lhs(s, n, 16) == seq::s_identity_rhs(f4, n));
  CHECK(seq::s_identity_lhs(s, 1, 1) != seq::s_identity_rhs(f4, 1));
}

TEST_CASE("Legendre asymptotic and the convergence threshold") {
  const double r = seq::laplace_heine_ratio(500, 40).to_double();
  CHECK(r >= 0.999);
  CHECK(r <= 1.001);
  const auto th = seq::convergence_threshold(1000, 300);
  REQUIRE(th.found);
  CHECK(th.N <= 1000);
  CHECK(th.last_failure == th.N - 1);
  // Direct comparison on both sides of N.
  auto holds = [](long n) {
    return BigRational(n) * pow(BigRational(8), n) * seq::legendreP(n, BigRational(2)) < pow(BigRational(30), n);
  };
  CHECK_FALSE(holds(th.N - 1));
  CHECK(holds(th.N));
  CHECK(holds(th.N + 300));
}
