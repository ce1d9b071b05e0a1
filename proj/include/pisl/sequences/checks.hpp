#pragma once

// Brute-force verification of recurrences and asymptotics for the sequence
// families. Table-taking overloads let callers check perturbed data.

#include "pisl/closedform/bigfloat.hpp"
#include "pisl/exact/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pisl::seq {

struct CheckReport {
  std::string name;
  bool pass = true;
  long n_max = 0;
  std::optional<long> first_failure;
  std::string detail;
};

/// (n+2)^3 f_{n+2} = 4(n+1)(4n+3)(4n+5) f_n + 2(2n+3)(3n^2+9n+7) f_{n+1}, for 0 <= n <= n_max.
CheckReport check_f4_recurrence(long n_max);
/// Same, with f4 values taken from `f4` (needs indices up to n_max + 2).
CheckReport check_f4_recurrence(const std::vector<BigInt>& f4, long n_max);

struct SIdentityReport {
  CheckReport check;
  /// "16n", "n", "both" or "neither": which s_n coefficient makes the identity hold for all n.
  std::string coefficient_resolution;
  /// u_0, u_1, u_2 (left-hand side with the 16n coefficient).
  std::vector<BigInt> anchors;
  bool anchors_match = false;
};

/// u(n) = 5n(4n+1)((n+2)s_{n+2} - 16n s_n) against
/// (30n^3+54n^2+7n-2) f_{n+1} + 2(60n^3+58n^2+17n+2) f_n for 0 <= n <= n_max.
SIdentityReport check_s_identity(long n_max);
SIdentityReport check_s_identity(const std::vector<BigInt>& f4, const std::vector<BigInt>& s, long n_max);

/// Left-hand side u(n) with s-coefficient `coef * n`.
BigInt s_identity_lhs(const std::vector<BigInt>& s, long n, long coef);
BigInt s_identity_rhs(const std::vector<BigInt>& f4, long n);

/// P_n(2) divided by (2+sqrt3)^(n+1/2) / (sqrt(2 n pi) 3^(1/4)).
BigFloat laplace_heine_ratio(long n, long digits = 40);

struct ThresholdReport {
  bool found = false;
  long N = 0;
  long span = 0;
  /// Largest n in [1, search_max + span] where the inequality fails.
  long last_failure = 0;
};

/// Minimal N <= search_max with n 8^n P_n(2) < 30^n for every n in [N, N + span], compared exactly.
ThresholdReport convergence_threshold(long search_max = 1000, long span = 300);

}  // namespace pisl::seq
