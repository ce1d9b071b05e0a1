#pragma once

// Catalog of summand families t_k used by series and congruence sums.

#include "pisl/exact/bigint.hpp"

#include <string>
#include <variant>

namespace pisl::series {

/// t_k = W_k(x)
struct KindW {
  BigRational x;
  bool operator==(const KindW&) const = default;
};
/// t_k = f_k^(4)
struct KindF4 {
  bool operator==(const KindF4&) const = default;
};
/// t_k = C(2k,k) T_k(b1,c1) T_k(b2,c2)
struct KindB2kTT {
  BigInt b1, c1, b2, c2;
  bool operator==(const KindB2kTT&) const = default;
};
/// t_k = C(2k,k)^2 T_k(b,c)
struct KindB2k2T {
  BigInt b, c;
  bool operator==(const KindB2k2T&) const = default;
};
/// t_k = C(2k,k) F_k(x)
struct KindB2kF {
  BigRational x;
  bool operator==(const KindB2kF&) const = default;
};
/// t_k = F_k(x)
struct KindFOnly {
  BigRational x;
  bool operator==(const KindFOnly&) const = default;
};
/// t_n = C(2n,n) sum_k x^k C(2k,k)^2 C(2(n-k),n-k)^2 / C(n,k)
struct KindRecip {
  BigRational x;
  bool operator==(const KindRecip&) const = default;
};
/// t_n = C(2n,n) sum_k C(2k,k)^2 C(2(n-k),n-k) y^(n-k)
struct KindConv12 {
  BigRational y;
  bool operator==(const KindConv12&) const = default;
};
/// t_k = S_k(y) = sum_j C(k,j)^4 y^j
struct KindS {
  BigRational y;
  bool operator==(const KindS&) const = default;
};

using TermKind = std::variant<KindW, KindF4, KindB2kTT, KindB2k2T, KindB2kF, KindFOnly, KindRecip, KindConv12, KindS>;

/// Exact t_k.
BigRational term_value(const TermKind& kind, long k);

/// Registry name: W, F4, B2k_TT, B2k2_T, B2k_F, F_only, B2n_conv_recip, B2n_conv12, S_poly.
std::string kind_name(const TermKind& kind);

/// Human-readable description such as "W_k(9/10)".
std::string describe(const TermKind& kind);

}  // namespace pisl::series
