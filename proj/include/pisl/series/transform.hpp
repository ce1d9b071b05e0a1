#pragma once

// Rewrites sum_k (a k + b) W_k(1 - 1/x) / (4x)^k as
// factor * sum_k (A k + B) f_k^(4) / (4x - 4)^k.

#include "pisl/exact/bigint.hpp"

namespace pisl::series {

struct TransformResult {
  BigRational A;
  BigRational B;
  BigRational factor;
  BigRational new_base;
  /// A, B divided by their rational content (A_reduced > 0), factor rescaled to match.
  BigInt A_reduced;
  BigInt B_reduced;
  BigRational factor_reduced;
  /// |x - 1| >= 15/2, the region where both sides converge.
  bool in_convergence_region = false;
};

/// A = 2ax(5x-7), B = a(10x-13) + 10b(x-1)(x-2), factor = x / (10 (x-1)^2 (x-2)),
/// new_base = 4x - 4. Throws std::domain_error for x in {0, 1, 2}.
TransformResult transform_W_to_f4(const BigInt& a, const BigInt& b, const BigRational& x);

/// The x with 1 - 1/x = w, i.e. x = 1 / (1 - w). Throws std::domain_error for w = 1.
BigRational transform_point(const BigRational& w);

}  // namespace pisl::series
