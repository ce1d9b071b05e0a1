#pragma once

// Claim files.
//
// A claims file is a JSON array. Common fields of every claim:
//   id, kind, family (series id the claim belongs to), reading ("primary" or
//   "alternate"; alternates are reported but never gate a run), flag
//   (optional note on an ambiguous transcription), excluded (primes), p_min.
//
// A sum is {"series": <registry id>} with optional overrides of a, b, base,
// term_kind, or a self-contained {term_kind, a, b, base}.
//
// A condition ("when") is an object with optional keys
//   "mod": N, "in": [r...]                 p mod N lies in the list
//   "symbols": {"J(-2)": 1, "L(3)": -1}    residue expressions with required values
// An absent condition always holds.
//
// kind-specific fields:
//   congruence   sum, e, cases: [{when, value}]
//   quadform     sum, e, twist, cases: [{when, form: {A, d, target: "p"|"2p"}, value}]
//                (a case without form is an else-case and may not use x)
//   divisibility term_kind, a, b, m, g, c, coef, binom ("none",
//                "C(2n,n)", "C(2n-1,n-1)"), n_min, parity ("none",
//                ...); value c^(n-1) sum_{k<n} (ak+b) m^(n-1-k) g^k t_k / (coef n binom)
//                "odd_iff_pow2", "odd_iff_pow2_plus1", "mod8_is_5")
//   lift         sum, when, twist, divisor ("pn2" or "pn2_central"),
//                ref ("n": the subtracted sum runs over k<n; "p": over k<p)
//   relation   x, e

#include "pisl/congruence/residue_expr.hpp"
#include "pisl/congruence/sum_mod.hpp"
#include "pisl/series/entry.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace pisl::cong {

using Json = nlohmann::json;

struct Condition {
  long mod = 0;  // 0: no residue-class constraint
  std::vector<long> in;
  std::vector<std::pair<ResidueExpr, int>> symbols;

  /// False if a symbol evaluates to 0 (p ramified), with *ramified set.
  bool holds(std::uint64_t p, bool* ramified = nullptr) const;
  std::string text() const;
};

struct PredictionCase {
  Condition when;
  ResidueExpr value;
};

struct CongruenceBody {
  SumSpec sum;
  int e = 2;
  std::vector<PredictionCase> cases;
};

struct QuadForm {
  std::uint64_t A = 1;
  std::uint64_t d = 1;
  bool doubled = false;  // target 2p
};

struct QuadCase {
  Condition when;
  std::optional<QuadForm> form;
  ResidueExpr value;
};

struct QuadFormBody {
  SumSpec sum;
  int e = 2;
  ResidueExpr twist;
  std::vector<QuadCase> cases;
};

enum class Binom { None, Central, CentralOdd };
enum class Parity { None, OddIffPow2, OddIffPow2Plus1, Mod8Is5 };

struct DivisibilityBody {
  series::TermKind term;
  BigInt a, b;
  BigInt m;
  BigInt g = 1;  // factor g^k
  BigRational c = 1;
  BigInt coef = 1;
  Binom binom = Binom::None;
  long n_min = 1;
  Parity parity = Parity::None;
};

struct LiftBody {
  SumSpec sum;
  Condition when;
  ResidueExpr twist;
  bool central = false;
  bool ref_p = false;
};

struct RelationBody {
  BigRational x;
  int e = 2;
};

struct Claim {
  std::string id;
  std::string family;
  bool primary = true;
  std::string flag;
  std::set<std::uint64_t> excluded;
  std::uint64_t p_min = 2;
  std::variant<CongruenceBody, QuadFormBody, DivisibilityBody, LiftBody, RelationBody> body;

  std::string kind() const;
  /// Not excluded and at least p_min. Does not check lift applicability.
  bool admissible(std::uint64_t p) const { return p >= p_min && !excluded.count(p); }
};

/// Sums that name a series are resolved against `registry`.
Claim claim_from_json(const Json& j, const std::vector<series::SeriesEntry>& registry);
std::vector<Claim> parse_claims(const Json& j, const std::vector<series::SeriesEntry>& registry);
std::vector<Claim> load_claims(const std::string& path, const std::vector<series::SeriesEntry>& registry);
std::string default_claims_path();

/// "all", a claim id, a family name, a kind name, or a comma-separated list of those.
std::vector<const Claim*> select_claims(const std::vector<Claim>& claims, const std::string& selector);

}  // namespace pisl::cong
