#pragma once

// Recognizing pi * S as an algebraic number, and searching for (a, b) in
// sum (a k + b) t_k / m^k = C / pi.

#include "pisl/closedform/expr.hpp"
#include "pisl/discovery/pslq.hpp"
#include "pisl/series/term_kind.hpp"

#include <optional>
#include <vector>

namespace pisl::disc {

inline const std::vector<long> kDefaultDiscriminants{1, 2, 3, 5, 6, 7, 10, 13, 15, 35, 39, 95, 130};

struct IdentifyOptions {
  std::vector<long> d_candidates = kDefaultDiscriminants;
  BigInt max_norm{"10000000000000000"};  // 10^16
  /// Also try (pi S)^2 in Q + Q sqrt(d).
  bool quartic = false;
};

/// Tries, in order: (pi S)^2 rational; pi S sqrt(d) rational; pi S in Q + Q sqrt(d);
/// optionally (pi S)^2 in Q + Q sqrt(d). The candidate is re-evaluated and must
/// match S to the precision of S less 15 digits. Requires S.digits() >= 60.
std::optional<AlgebraicExpr> identify_series(const BigFloat& S, const IdentifyOptions& opt = {});

/// r * sqrt(s) / pi with s squarefree, as (num * sqrt(s)) / (den * pi).
AlgebraicExpr radical_over_pi(const BigRational& r, const BigInt& s);

/// Largest f with f^2 | n, and n / f^2 (n > 0).
std::pair<BigInt, BigInt> square_part(const BigInt& n);

struct SearchResult {
  BigInt a;
  BigInt b;
  AlgebraicExpr C;
  Relation relation;
};

/// A1 = sum k t_k / m^k and A0 = sum t_k / m^k at `digits` + 10 digits.
struct MomentSums {
  BigFloat A1;
  BigFloat A0;
};
/// Throws series::NonConvergent if the sums diverge.
MomentSums moment_sums(const series::TermKind& kind, const BigRational& m, long digits);

/// The PSLQ step of search_ab on precomputed sums.
std::optional<SearchResult> search_ab(const MomentSums& sums, long d, long digits, const BigInt& max_norm);

/// |t_{k1} / t_{k0}|^(1/(k1-k0)) / |m|: an estimate of the term ratio (0 when t vanishes).
double ratio_estimate(const series::TermKind& kind, const BigRational& m, long k0 = 100, long k1 = 120);

/// PSLQ on [A1 pi sqrt(d), A0 pi sqrt(d), 1] with A1 = sum k t_k/m^k and
/// A0 = sum t_k/m^k. Returns primitive (a, b) with a > 0 and
/// sum (a k + b) t_k / m^k = C. Throws series::NonConvergent if either sum diverges.
std::optional<SearchResult> search_ab(const series::TermKind& kind, const BigRational& m, long d, long digits = 60,
                                      const BigInt& max_norm = BigInt(1000000000));

}  // namespace pisl::disc
