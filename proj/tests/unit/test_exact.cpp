#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support.hpp"
#include "pisl/exact/bigint.hpp"
#include "pisl/exact/modular.hpp"
#include "pisl/exact/primes.hpp"
#include "pisl/exact/quadform.hpp"

using namespace pisl;

namespace {

BigInt factorial(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Euler's criterion by repeated multiplication (no powmod).
int euler(std::int64_t a, std::int64_t p) {
  std::int64_t r = ((a % p) + p) % p, acc = 1;
  if (r == 0) return 0;
  for (std::int64_t i = 0; i < (p - 1) / 2; ++i) acc = acc * r % p;
  return acc == 1 ? 1 : -1;
}

BigRational random_rational(long range) {
  const long den = test::uniform(1, range);
  return make_rational(BigInt(test::uniform(-range, range)), BigInt(den));
}

}  // namespace

TEST_CASE("rationals are canonical") {
  const auto q = make_rational(BigInt(6), BigInt(-4));
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(make_rational(BigInt(0), BigInt(-7))) == "0");
  CHECK(parse_rational("-10/4") == BigRational(-5, 2));
  CHECK(parse_rational("17") == BigRational(17));
  CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("3/"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("rational powers and log10") {
  CHECK(pow(BigRational(2, 3), 3) == BigRational(8, 27));
  CHECK(pow(BigRational(2, 3), -2) == BigRational(9, 4));
  CHECK(pow(BigRational(5), 0) == BigRational(1));
  CHECK_THROWS_AS(pow(BigRational(0), -1), std::domain_error);
  CHECK(log10_floor(BigRational(999)) == 2);
  CHECK(log10_floor(BigRational(1000)) == 3);
  CHECK(log10_floor(BigRational(1, 1000)) == -3);
  CHECK(log10_floor(BigRational(-15, 1000)) == -2);
}

TEST_CASE("binomial against factorials, row sums and symmetry") {
  for (long n = 0; n <= 60; ++n) {
    BigInt row = 0;
    for (long k = 0; k <= n; ++k) {
      const BigInt c = binomial(n, k);
      CHECK(c == factorial(n) / (factorial(k) * factorial(n - k)));
      CHECK(c == binomial(n, n - k));
      row += c;
    }
    CHECK(row == pow(BigInt(2), static_cast<unsigned long>(n)));
    CHECK(binomial(n, -1) == 0);
    CHECK(binomial(n, n + 1) == 0);
  }
}

TEST_CASE("modular helpers") {
  std::uint64_t acc = 1;
  for (int i = 0; i < 200; ++i) acc = acc * 3 % 1000003;
  CHECK(powmod(3, 200, 1000003) == acc);
  CHECK(powmod(2, 10, 1000) == 24);
  CHECK(*invmod(3, 7) == 5);
  CHECK_FALSE(invmod(6, 9).has_value());
  const Residue a(5, 49), b(47, 49);
  CHECK((a + b).value() == 3);
  CHECK((a - b).value() == 7);
  CHECK((a * b).value() == 235 % 49);
  CHECK((-a).value() == 44);
  CHECK((a * a.inverse()).value() == 1);
  CHECK_THROWS_AS(Residue(7, 49).inverse(), NonInvertibleDenominator);
  CHECK(Residue::from_signed(-1, 25).value() == 24);
  CHECK_THROWS(a + Residue(1, 50));
}

TEST_CASE("jacobi matches Euler's criterion for primes below 1000") {
  for (std::int64_t p = 3; p < 1000; p += 2) {
    if (!trial_prime(static_cast<std::uint64_t>(p))) continue;
    for (std::int64_t a = 1; a < p; ++a) REQUIRE(jacobi(a, p) == euler(a, p));
    CHECK(jacobi(-1, p) == ((p % 4 == 1) ? 1 : -1));
    CHECK(jacobi(BigInt(2), BigInt(p)) == ((p % 8 == 1 || p % 8 == 7) ? 1 : -1));
  }
  CHECK_THROWS_AS(jacobi(3, 10), std::invalid_argument);
  CHECK_THROWS_AS(jacobi(3, -5), std::invalid_argument);
}

TEST_CASE("jacobi is multiplicative in the top argument") {
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t a = test::uniform(-5000, 5000), b = test::uniform(-5000, 5000);
    const std::int64_t n = 2 * test::uniform(0, 20000) + 1;
    REQUIRE(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
  }
}

TEST_CASE("reduce_rational is a ring homomorphism on m-integral rationals") {
  const std::uint64_t moduli[] = {49, 121, 169, 289, 1000003};
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t m = moduli[i % 5];
    BigRational q1, q2;
    do q1 = random_rational(500);
    while (std::gcd(q1.get_den().get_ui(), m) != 1);
    do q2 = random_rational(500);
    while (std::gcd(q2.get_den().get_ui(), m) != 1);
    const Residue r1 = reduce_rational(q1, m), r2 = reduce_rational(q2, m);
    REQUIRE(reduce_rational(q1 + q2, m) == r1 + r2);
    REQUIRE(reduce_rational(q1 * q2, m) == r1 * r2);
    // den * r == num (mod m)
    REQUIRE(reduce_integer(q1.get_den(), m) * r1 == reduce_integer(q1.get_num(), m));
  }
  CHECK_THROWS_AS(reduce_rational(BigRational(1, 14), 49), NonInvertibleDenominator);
  CHECK(reduce_integer(BigInt(-1), 9).value() == 8);
}

TEST_CASE("p-adic valuation") {
  CHECK(padic_val(BigInt(48), 2) == 4);
  CHECK(padic_val(BigInt(-75), 5) == 2);
  CHECK(padic_val(BigRational(7, 98), 7) == -1);
  CHECK(padic_val(BigRational(7, 98), 2) == -1);
  CHECK_THROWS_AS(padic_val(BigInt(0), 3), std::domain_error);
  const std::uint64_t primes[] = {2, 3, 5, 7};
  for (int i = 0; i < 500; ++i) {
    BigRational q1 = random_rational(2000), q2 = random_rational(2000);
    if (q1 == 0 || q2 == 0) continue;
    for (auto p : primes) REQUIRE(padic_val(BigRational(q1 * q2), p) == padic_val(q1, p) + padic_val(q2, p));
  }
}

TEST_CASE("square roots modulo primes") {
  for (std::uint64_t p : {3ull, 5ull, 13ull, 17ull, 97ull, 1009ull, 65537ull, 1000003ull}) {
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t a = static_cast<std::uint64_t>(test::uniform(0, static_cast<long>(p) - 1));
      const auto r = sqrt_mod_prime(a, p);
      if (a == 0) {
        CHECK((r && *r == 0));
      } else if (jacobi(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p)) == 1) {
        REQUIRE(r.has_value());
        CHECK(mulmod(*r, *r, p) == a);
      } else {
        CHECK_FALSE(r.has_value());
      }
    }
  }
}

TEST_CASE("Pascal table modulo m") {
  const PascalTable t(169, 80);
  for (long n = 0; n <= 80; ++n) {
    for (long k = 0; k <= n; ++k) REQUIRE(t(n, k) == reduce_integer(binomial(n, k), 169).value());
  }
  CHECK(t(5, 7) == 0);
  CHECK(t(5, -1) == 0);
}

TEST_CASE("primality and prime ranges") {
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == trial_prime(n));
  CHECK(is_prime(1000000007ull));
  CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
  const auto ps = primes_in(3, 30, {7, 19});
  CHECK(ps == std::vector<std::uint64_t>{3, 5, 11, 13, 17, 23, 29});
  CHECK_THROWS(primes_in(30, 3));
}

TEST_CASE("representations by binary quadratic forms agree with brute force") {
  struct Form {
    std::uint64_t A, d;
    bool doubled;
  };
  const Form forms[] = {{1, 1, false}, {1, 2, false}, {1, 3, false}, {1, 4, false}, {1, 7, false},
                        {1, 42, false}, {1, 15, false}, {3, 5, false}, {2, 5, false}, {3, 55, true},
                        {1, 5, true}, {5, 7, true}};
  for (std::uint64_t p = 3; p < 600; p += 2) {
    if (!trial_prime(p)) continue;
    for (const auto& f : forms) {
      if ((2 * f.A * f.d) % p == 0) continue;
      const std::uint64_t target = f.doubled ? 2 * p : p;
      bool brute = false;
      for (std::uint64_t x = 0; f.A * x * x <= target && !brute; ++x) {
        const std::uint64_t rest = target - f.A * x * x;
        if (rest % f.d) continue;
        const std::uint64_t y2 = rest / f.d;
        const auto y = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(y2))));
        brute = y * y == y2;
      }
      const auto r = represent(f.A, f.d, target);
      REQUIRE(r.has_value() == brute);
      if (r) {
        CHECK(r->holds());
        CHECK(r->target == target);
      }
    }
  }
  const auto r13 = cornacchia(4, 13);
  REQUIRE(r13);
  CHECK(r13->x == 3);
  CHECK(r13->y == 1);
  const auto r11 = cornacchia(7, 11);
  REQUIRE(r11);
  CHECK(r11->x == 2);
  CHECK(r11->y == 1);
  CHECK_THROWS_AS(represent(1, 1, 15), std::invalid_argument);
}
