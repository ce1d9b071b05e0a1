#pragma once

// Truncated sums  sum_{k<N} (a k + b) t_k / base^k  modulo p^e.

#include "pisl/exact/bigint.hpp"
#include "pisl/exact/modular.hpp"
#include "pisl/series/entry.hpp"
#include "pisl/series/term_kind.hpp"

#include <cstdint>
#include <memory>

namespace pisl::cong {

struct SumSpec {
  series::TermKind term;
  BigInt a;
  BigInt b;
  BigRational base;
};

SumSpec spec_of(const series::SeriesEntry& e);

/// Pascal rows reused across sums for one prime power; grows on demand.
class PrimeWorkspace {
 public:
  PrimeWorkspace(std::uint64_t p, int e);
  std::uint64_t p() const { return p_; }
  int e() const { return e_; }
  std::uint64_t modulus() const { return m_; }
  const PascalTable& rows(int max_row);

 private:
  std::uint64_t p_;
  int e_;
  std::uint64_t m_;
  std::unique_ptr<PascalTable> table_;
};

/// Largest Pascal row the native path needs for `terms` terms of this kind.
int rows_needed(const series::TermKind& kind, long terms);

/// Native evaluation in Z/p^e. Throws NonInvertibleDenominator when the base,
/// a parameter denominator or (reciprocal kind) some C(n,k) is not a unit.
Residue sum_mod_native(const SumSpec& s, PrimeWorkspace& ws, long terms);

/// Exact partial sum over Q.
BigRational sum_exact(const SumSpec& s, long terms);

/// The exact sum reduced mod p^e (throws NonInvertibleDenominator if not p-integral).
Residue sum_mod_exact(const SumSpec& s, std::uint64_t p, int e, long terms);

/// Sum over k < p*n modulo p^e: native, except for the reciprocal kind whose
/// exact sum is authoritative.
Residue sum_mod(const SumSpec& s, std::uint64_t p, int e, long n = 1);
Residue sum_mod(const SumSpec& s, PrimeWorkspace& ws, long terms);

}  // namespace pisl::cong
