#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support.hpp"
#include "pisl/closedform/bigfloat.hpp"
#include "pisl/powerseries/gf_checks.hpp"
#include "pisl/powerseries/truncated_series.hpp"
#include "pisl/sequences/sequences.hpp"

using namespace pisl;

namespace {

TruncatedSeries random_series(long order) {
  std::vector<BigRational> c;
  for (long i = 0; i <= order; ++i) c.push_back(make_rational(BigInt(test::uniform(-50, 50)), BigInt(test::uniform(1, 9))));
  return TruncatedSeries(c, order);
}

}  // namespace

TEST_CASE("truncated ring laws on random series") {
  for (int t = 0; t < 200; ++t) {
    const auto a = random_series(20), b = random_series(20), c = random_series(20);
    REQUIRE(ts_mul(ts_mul(a, b), c) == ts_mul(a, ts_mul(b, c)));
    REQUIRE(ts_mul(a, ts_add(b, c)) == ts_add(ts_mul(a, b), ts_mul(a, c)));
    REQUIRE(ts_mul(a, b) == ts_mul(b, a));
    REQUIRE(ts_sub(ts_add(a, b), b) == a);
  }
}

TEST_CASE("inverse, shifts and (1+4z)^-e") {
  TruncatedSeries a = random_series(15);
  a[0] = 3;
  TruncatedSeries one(15);
  one[0] = 1;
  CHECK(ts_mul(a, ts_inverse(a)) == one);
  a[0] = 0;
  CHECK_THROWS_AS(ts_inverse(a), std::domain_error);

  const auto base = ts_poly({BigRational(1), BigRational(4)}, 12);
  for (long e = 1; e <= 5; ++e) {
    TruncatedSeries p({BigRational(1)}, 12);
    for (long i = 0; i < e; ++i) p = ts_mul(p, base);
    CHECK(ts_mul(p, ts_inv_pow_1p4z(e, 12)) == TruncatedSeries({BigRational(1)}, 12));
  }
  const auto s = ts_shift(ts_poly({BigRational(1), BigRational(2)}, 4), 3);
  CHECK(s[3] == 1);
  CHECK(s[4] == 2);
  CHECK(s[0] == 0);
  CHECK(ts_scale(s, BigRational(1, 2))[4] == 1);
  CHECK_THROWS_AS(ts_add(TruncatedSeries(3), TruncatedSeries(4)), std::invalid_argument);
  CHECK(ts_mul(TruncatedSeries(3), TruncatedSeries(5)).order() == 3);
}

TEST_CASE("W generating functions match f4 and n(f4 + 4 s_n)") {
  const long N = 60;
  const auto f4 = seq::f4_table(N);
  const auto s = seq::s_table(N);
  const auto plain = lhs_gf_W(N, false), weighted = lhs_gf_W(N, true);
  for (long n = 0; n <= N; ++n) {
    REQUIRE(plain[n] == BigRational(f4[static_cast<std::size_t>(n)]));
    REQUIRE(weighted[n] == BigRational(n * (f4[static_cast<std::size_t>(n)] + 4 * s[static_cast<std::size_t>(n)])));
  }
  CHECK(check_w_generating_functions(N).pass);
}

TEST_CASE("z-identity to order 60 and its fault detection") {
  CHECK(verify_ziden(60).pass);
  CHECK(ziden_lhs(30) == ziden_rhs(seq::f4_table(30), 30));
  auto f4 = seq::f4_table(60);
  f4[9] -= 1;
  const auto bad = verify_ziden(f4, 60);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.first_failure.has_value());
  CHECK(*bad.first_failure == 9);
}

TEST_CASE("generating function at z = 1/100 against the f4 series") {
  // sum_k z^k (1+4z)^(-k-1) W_k(1/(1+4z)) versus sum_n f4(n) z^n.
  const long digits = 40;
  const BigRational z(1, 100), u = 1 / (1 + 4 * z);
  BigFloat lhs(digits), rhs(digits);
  BigRational zk = 1;
  for (long k = 0; k <= 200; ++k) {
    lhs += BigFloat(BigRational(zk * pow(u, k + 1) * seq::w_fast(k, u)), digits);
    rhs += BigFloat(BigRational(zk * BigRational(seq::f4(k))), digits);
    zk *= z;
  }
  CHECK(abs(lhs - rhs) < pow10(-30, digits));
}
