#pragma once

#include "pisl/congruence/claims.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pisl::cong {

enum class Outcome { Pass, Fail, Skip, Error };
std::string outcome_name(Outcome o);

/// One record per (claim, p) or (claim, n) or, for lifts, (claim, p, n).
struct CheckResult {
  std::string claim;
  std::string kind;
  bool primary = true;
  std::uint64_t p = 0;  // 0 for divisibility records
  long n = 0;           // 0 for per-prime records
  Outcome outcome = Outcome::Skip;
  std::string reason;
  Json data = Json::object();
};

Json to_json(const CheckResult& r);

class CostCap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RepresentationNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p-indexed checks; `ws` (modulus p^2) may be shared across claims at the same prime.
CheckResult check_congruence(const Claim& c, std::uint64_t p, PrimeWorkspace* ws = nullptr);
CheckResult check_quadform(const Claim& c, std::uint64_t p, PrimeWorkspace* ws = nullptr);
CheckResult check_relation(const Claim& c, std::uint64_t p, PrimeWorkspace* ws = nullptr);

/// Positive integrality and parity of the normalized sum at n.
CheckResult check_divisibility(const Claim& c, long n);
/// Exact value of the normalized sum at n.
BigRational divisibility_value(const DivisibilityBody& b, long n);

/// Lift applicability: admissible and the claim's condition holds.
bool lift_applies(const Claim& c, std::uint64_t p);
/// Throws CostCap when p*n > cost_cap.
CheckResult check_lift(const Claim& c, std::uint64_t p, long n, long cost_cap = 400);

/// Dispatch for the p-indexed kinds (congruence, quadform, relation).
CheckResult check_at_prime(const Claim& c, std::uint64_t p, PrimeWorkspace* ws = nullptr);

/// Index of the unique applicable case; nullopt with `why` set otherwise
/// ("ramified" when no case applies because some symbol vanishes at p).
std::optional<std::size_t> select_case(const std::vector<const Condition*>& conds, std::uint64_t p, std::string* why);

}  // namespace pisl::cong
