#pragma once

// Arbitrary-precision integers and rationals.
//
// BigInt and BigRational are the GMP C++ classes. Every BigRational that
// leaves this library is canonical: lowest terms, positive denominator,
// zero is 0/1. Values built with make_rational() or parse_rational() are
// canonicalized; arithmetic through gmpxx operators keeps them canonical.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pisl {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Canonical num/den. Throws std::domain_error on a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Parses "a", "-a" or "a/b" (no spaces).
BigRational parse_rational(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& q);

/// q^e for any integer e; throws std::domain_error for 0^negative.
BigRational pow(const BigRational& q, long e);
BigInt pow(const BigInt& b, unsigned long e);

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

/// floor(log10 |q|) for q != 0.
long log10_floor(const BigRational& q);

}  // namespace pisl
