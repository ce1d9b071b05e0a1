#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support.hpp"
#include "pisl/congruence/sweep.hpp"
#include "pisl/exact/primes.hpp"

#include <sstream>

using namespace pisl;
using namespace pisl::cong;

namespace {

const SumSpec* sum_of(const Claim& c) {
  if (const auto* b = std::get_if<CongruenceBody>(&c.body)) return &b->sum;
  if (const auto* b = std::get_if<QuadFormBody>(&c.body)) return &b->sum;
  if (const auto* b = std::get_if<LiftBody>(&c.body)) return &b->sum;
  return nullptr;
}

std::vector<const Claim*> claims_with_sums() {
  std::vector<const Claim*> out;
  for (const auto& c : test::claims()) {
    if (sum_of(c)) out.push_back(&c);
  }
  return out;
}

std::uint64_t random_admissible_prime(const Claim& c, std::int64_t hi) {
  const auto ps = primes_in(5, hi, c.excluded);
  for (int tries = 0; tries < 100; ++tries) {
    const auto p = ps[static_cast<std::size_t>(test::uniform(0, static_cast<long>(ps.size()) - 1))];
    if (c.admissible(p)) return p;
  }
  return 0;
}

std::uint64_t json_u64(const Json& j, const char* key) { return j.at(key).get<std::uint64_t>(); }

}  // namespace

TEST_CASE("residue expressions") {
  const EvalContext p13{13, 2, std::nullopt};
  CHECK(ResidueExpr::parse("J(-1)").eval(EvalContext{5}) == 1);
  CHECK(ResidueExpr::parse("J(-1)").eval(EvalContext{7}) == -1);
  CHECK(ResidueExpr::parse("L(5)").eval(EvalContext{11}) == 1);
  CHECK(ResidueExpr::parse("L(5)").eval(EvalContext{13}) == -1);
  CHECK(ResidueExpr::parse("D(17)").eval(EvalContext{17}) == 1);
  CHECK(ResidueExpr::parse("D(17)").eval(EvalContext{19}) == 0);
  CHECK(ResidueExpr::parse("p/2*(63*J(-1)-1)").eval(p13) == BigRational(403));
  CHECK(ResidueExpr::parse("-2^3+p").eval(p13) == 5);
  // Q(t, r) = t^((p-r)/4) modulo a high power of p
  const BigRational q = ResidueExpr::parse("Q(-3,1)").eval(p13);
  CHECK(reduce_rational(q, 169).value() == reduce_integer(BigInt(-27), 169).value());
  const auto with_x = ResidueExpr::parse("4*x^2-2*p");
  CHECK(with_x.uses_x());
  CHECK(with_x.eval(EvalContext{13, 2, BigInt(3)}) == 10);
  CHECK_THROWS(with_x.eval(p13));
  CHECK_FALSE(ResidueExpr::parse("p*J(-6)").uses_x());
  for (const char* bad : {"", "1+", "J(", "J(-1", "y", "2^100", "L(4)", "p//2", "Q(3)"}) {
    CHECK_THROWS_AS(ResidueExpr::parse(bad), std::invalid_argument);
  }
  CHECK_THROWS(ResidueExpr::parse("1/(p-p)").eval(p13));
}

TEST_CASE("claims file loads and selectors work") {
  const auto& all = test::claims();
  CHECK(all.size() == 116);
  CHECK(select_claims(all, "all").size() == all.size());
  CHECK(select_claims(all, "W2.lift").size() == 1);
  const auto fam = select_claims(all, "W2");
  CHECK(fam.size() == 4);
  const auto lifts = select_claims(all, "lift");
  for (const auto* c : lifts) CHECK(c->kind() == "lift");
  CHECK(select_claims(all, "W2.div,CC-12").size() == 2);
  CHECK_THROWS_AS(select_claims(all, "NOPE"), std::invalid_argument);

  Json dup = Json::array({{{"id", "a"}, {"kind", "relation"}, {"x", "2"}}, {{"id", "a"}, {"kind", "relation"}, {"x", "3"}}});
  CHECK_THROWS_AS(parse_claims(dup, test::registry()), std::invalid_argument);
  Json missing = {{"id", "b"}, {"kind", "congruence"}, {"sum", {{"series", "NOPE"}}}, {"cases", Json::array()}};
  CHECK_THROWS_AS(claim_from_json(missing, test::registry()), std::invalid_argument);
  Json badkind = {{"id", "c"}, {"kind", "other"}};
  CHECK_THROWS_AS(claim_from_json(badkind, test::registry()), std::invalid_argument);
}

TEST_CASE("native sums agree with exact rational reduction (50 random pairs, p < 50)") {
  const auto pool = claims_with_sums();
  int compared = 0;
  for (int i = 0; i < 50; ++i) {
    const Claim& c = *pool[static_cast<std::size_t>(test::uniform(0, static_cast<long>(pool.size()) - 1))];
    const std::uint64_t p = random_admissible_prime(c, 49);
    REQUIRE(p != 0);
    const SumSpec& s = *sum_of(c);
    PrimeWorkspace ws(p, 2);
    std::optional<Residue> exact, native;
    try {
      exact = sum_mod_exact(s, p, 2, static_cast<long>(p));
    } catch (const NonInvertibleDenominator&) {
    }
    try {
      native = sum_mod_native(s, ws, static_cast<long>(p));
    } catch (const NonInvertibleDenominator&) {
    }
    INFO(c.id << " p=" << p);
    if (native) {
      REQUIRE(exact.has_value());
      CHECK(*native == *exact);
      ++compared;
    } else if (!std::holds_alternative<series::KindRecip>(s.term)) {
      CHECK_FALSE(exact.has_value());
    }
  }
  CHECK(compared >= 40);
}

TEST_CASE("sums are linear in (a, b) (20 random claims)") {
  const auto pool = claims_with_sums();
  for (int i = 0; i < 20; ++i) {
    const Claim& c = *pool[static_cast<std::size_t>(test::uniform(0, static_cast<long>(pool.size()) - 1))];
    const std::uint64_t p = random_admissible_prime(c, 200);
    const SumSpec& s = *sum_of(c);
    SumSpec k_only = s, t_only = s;
    k_only.a = 1;
    k_only.b = 0;
    t_only.a = 0;
    t_only.b = 1;
    INFO(c.id << " p=" << p);
    try {
      const Residue full = sum_mod(s, p, 2), sk = sum_mod(k_only, p, 2), st = sum_mod(t_only, p, 2);
      const std::uint64_t m = full.modulus();
      CHECK(full == reduce_integer(s.a, m) * sk + reduce_integer(s.b, m) * st);
    } catch (const NonInvertibleDenominator&) {
    }
  }
}

TEST_CASE("spot congruences") {
  auto at = [](const char* id, std::uint64_t p) { return check_at_prime(test::claim(id), p); };

  const auto w2 = at("W2.mod_p2", 7);
  CHECK(w2.outcome == Outcome::Pass);
  CHECK(json_u64(w2.data, "sum") == 35);

  CHECK(at("W1.mod_p2", 13).outcome == Outcome::Pass);
  CHECK(json_u64(at("W1.mod_p2", 13).data, "sum") == 156);

  // 13 = 3^2 + 4*1^2: 4*9 - 26 = 10 (mod 169)
  const auto w1q = at("W1.quadform", 13);
  CHECK(w1q.outcome == Outcome::Pass);
  CHECK(json_u64(w1q.data, "sum") == 10);
  CHECK(json_u64(w1q.data["representation"], "x") == 3);
  const auto w1q7 = at("W1.quadform", 7);
  CHECK(w1q7.outcome == Outcome::Pass);
  CHECK(json_u64(w1q7.data, "sum") == 0);

  // 11 = 2^2 + 7*1^2: 4*4 - 22 = -6 (mod 121)
  const auto rc = at("RC-m25/16.quadform", 11);
  CHECK(rc.outcome == Outcome::Pass);
  CHECK(json_u64(rc.data, "sum") == 115);

  const auto cc = at("CC-12.mod_p2", 5);
  CHECK(cc.outcome == Outcome::Pass);
  CHECK(json_u64(cc.data, "sum") == 20);

  CHECK(at("W4.quadform", 7).outcome == Outcome::Skip);
  CHECK(at("W4.quadform", 7).reason == "ramified");
  CHECK(at("W13.quadform", 17).outcome == Outcome::Pass);
  CHECK(at("W13.quadform.else0", 17).outcome == Outcome::Fail);
}

TEST_CASE("relation between W and S sums") {
  for (const char* id : {"REL.mod_p2.x=2", "REL.mod_p2.x=10", "REL.mod_p.x=3"}) {
    for (std::uint64_t p : {11ull, 13ull, 29ull}) CHECK(check_at_prime(test::claim(id), p).outcome == Outcome::Pass);
  }
  const auto rel7 = claim_from_json(Json{{"id", "t"}, {"kind", "relation"}, {"x", "7"}, {"e", 2}}, test::registry());
  const auto r = check_at_prime(rel7, 7);
  CHECK(r.outcome == Outcome::Skip);
  CHECK(r.reason == "x = 0 mod p");
}

TEST_CASE("divisibility and parity") {
  const auto w2 = check_divisibility(test::claim("W2.div"), 1);
  CHECK(w2.outcome == Outcome::Pass);
  CHECK(w2.data["value"] == "2");
  const auto ix = check_divisibility(test::claim("IX1.div"), 2);
  CHECK(ix.outcome == Outcome::Pass);
  CHECK(ix.data["value"] == "280637");
  const auto& body = std::get<DivisibilityBody>(test::claim("W12.div").body);
  for (long n = 1; n <= 32; ++n) {
    const BigRational v = divisibility_value(body, n);
    REQUIRE(v.get_den() == 1);
    const bool odd = mpz_odd_p(v.get_num().get_mpz_t()) != 0;
    CHECK(odd == ((n & (n - 1)) == 0));
  }
  for (const auto* c : select_claims(test::claims(), "divisibility")) {
    for (long n = 1; n <= 12; ++n) CHECK_MESSAGE(check_divisibility(*c, n).outcome != Outcome::Fail, c->id << " n=" << n);
  }
}

TEST_CASE("lifts") {
  const auto& w2 = test::claim("W2.lift");
  for (long n : {1, 2}) {
    const auto r = check_lift(w2, 17, n);
    CHECK(r.outcome == Outcome::Pass);
    CHECK(r.data["valuation"].get<int>() >= r.data["required"].get<int>());
  }
  CHECK_THROWS_AS(check_lift(w2, 211, 2), CostCap);
  CHECK(check_lift(w2, 211, 2, 1000).outcome == Outcome::Pass);
  // The Sigma_{k<p} reference reading fails.
  CHECK(check_lift(test::claim("W2.lift.ref_p"), 17, 2).outcome == Outcome::Fail);
}

TEST_CASE("case tables are exhaustive below 1000") {
  const auto report = audit_tables(select_claims(test::claims(), "all"), 3, 999);
  CHECK(report.checked > 3000);
  CHECK(report.problems.empty());
  for (const auto& p : report.problems) MESSAGE(p);
}

TEST_CASE("sweep below 100 has no gating failures and is thread-independent") {
  SweepOptions opt;
  opt.lo = 3;
  opt.hi = 100;
  opt.lift_primes = 2;
  opt.div_n_max = 15;
  opt.parity_n_max = 16;
  opt.threads = 1;
  const auto chosen = select_claims(test::claims(), "all");
  const auto one = run_sweep(chosen, opt);
  opt.threads = 3;
  const auto three = run_sweep(chosen, opt);
  std::ostringstream a, b;
  write_jsonl(a, one);
  write_jsonl(b, three);
  CHECK(a.str() == b.str());
  const auto s = summarize(one);
  CHECK(s.gating_failures == 0);
  CHECK(s.error == 0);
  CHECK(s.pass > 1000);
  // Every line is valid JSON with the expected fields.
  std::istringstream in(a.str());
  for (std::string line; std::getline(in, line);) {
    const Json j = Json::parse(line);
    REQUIRE(j.contains("claim"));
    REQUIRE(j.contains("outcome"));
    REQUIRE(j.contains("kind"));
  }
}
