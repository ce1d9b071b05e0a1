#pragma once

// Coefficientwise checks of the W_k generating functions and the z-identity.

#include "pisl/exact/bigint.hpp"
#include "pisl/powerseries/truncated_series.hpp"
#include "pisl/sequences/checks.hpp"

#include <vector>

namespace pisl {

/// sum_{k=0}^{N} w_k z^k (1+4z)^(-k-1) W_k(1/(1+4z)) to order N, with w_k = k
/// when weighted and 1 otherwise.
TruncatedSeries lhs_gf_W(long order, bool weighted);

/// Coefficients of lhs_gf_W(N, false) against f4(n) and of lhs_gf_W(N, true)
/// against n (f4(n) + 4 s_n).
seq::CheckReport check_w_generating_functions(long order);

/// Right-hand side of the z-identity: sum_k f_k z^k (k (5+12z-32z^2) + 20z - 24z^2).
TruncatedSeries ziden_rhs(const std::vector<BigInt>& f4, long order);
/// 5 (1-4z) lhs_gf_W(N, true).
TruncatedSeries ziden_lhs(long order);

/// Both sides to order N (N >= 2). The f4 overload uses the supplied table.
seq::CheckReport verify_ziden(long order);
seq::CheckReport verify_ziden(const std::vector<BigInt>& f4, long order);

}  // namespace pisl
