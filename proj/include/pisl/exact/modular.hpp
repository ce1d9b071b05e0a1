#pragma once

// Arithmetic in Z/m for word-sized m (m < 2^62), Jacobi symbols,
// p-adic valuations and reduction of rationals modulo m.

#include "pisl/exact/bigint.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pisl {

/// A rational whose denominator shares a factor with the modulus.
class NonInvertibleDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + m - b;
}
std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m);
std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m);

/// Element of Z/m with 0 <= value < m.
class Residue {
 public:
  Residue(std::uint64_t value, std::uint64_t modulus);
  static Residue from_signed(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  Residue pow(std::uint64_t e) const;
  /// Throws NonInvertibleDenominator when gcd(value, modulus) > 1.
  Residue inverse() const;

  bool operator==(const Residue& o) const = default;

 private:
  void check_same(const Residue& o) const;
  std::uint64_t value_;
  std::uint64_t modulus_;
};

std::string to_string(const Residue& r);

/// Jacobi symbol (a/n) for odd n >= 1; throws std::invalid_argument otherwise.
int jacobi(const BigInt& a, const BigInt& n);
int jacobi(std::int64_t a, std::int64_t n);

Residue reduce_integer(const BigInt& v, std::uint64_t m);
/// The residue r with den*r = num (mod m). Throws NonInvertibleDenominator.
Residue reduce_rational(const BigRational& q, std::uint64_t m);

/// v_p(n); throws std::domain_error for n = 0.
int padic_val(const BigInt& n, std::uint64_t p);
/// v_p(num) - v_p(den); throws std::domain_error for q = 0.
int padic_val(const BigRational& q, std::uint64_t p);

/// Square root of a modulo an odd prime p (Tonelli-Shanks), if a is a square.
std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

/// Rows 0..max_row of Pascal's triangle reduced modulo m, built by additions only.
class PascalTable {
 public:
  PascalTable(std::uint64_t modulus, int max_row);

  std::uint64_t modulus() const { return modulus_; }
  int max_row() const { return max_row_; }
  /// C(n, k) mod m; zero outside 0 <= k <= n. Requires n <= max_row.
  std::uint64_t operator()(long n, long k) const {
    if (k < 0 || k > n) return 0;
    return cells_[offset(n) + static_cast<std::size_t>(k)];
  }

 private:
  static std::size_t offset(long n) { return static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2; }
  std::uint64_t modulus_;
  int max_row_;
  std::vector<std::uint64_t> cells_;
};

}  // namespace pisl
