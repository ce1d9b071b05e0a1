#include "pisl/congruence/checks.hpp"

#include "pisl/exact/quadform.hpp"

#include <stdexcept>

namespace pisl::cong {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::Skip:
      return "skip";
    case Outcome::Error:
      return "error";
  }
  return "?";
}

Json to_json(const CheckResult& r) {
  Json j;
  j["claim"] = r.claim;
  j["kind"] = r.kind;
  j["reading"] = r.primary ? "primary" : "alternate";
  if (r.p) j["p"] = r.p;
  if (r.n) j["n"] = r.n;
  j["outcome"] = outcome_name(r.outcome);
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (!r.data.empty()) j["data"] = r.data;
  return j;
}

namespace {

CheckResult start(const Claim& c, std::uint64_t p, long n) {
  CheckResult r;
  r.claim = c.id;
  r.kind = c.kind();
  r.primary = c.primary;
  r.p = p;
  r.n = n;
  return r;
}

CheckResult finish(CheckResult r, Outcome o, std::string reason = {}) {
  r.outcome = o;
  r.reason = std::move(reason);
  return r;
}

std::uint64_t ipow(std::uint64_t p, int e) {
  std::uint64_t m = 1;
  for (int i = 0; i < e; ++i) m *= p;
  return m;
}

// Sum over k < terms reduced mod p^e, through a p^2 workspace.
Residue sum_at(const SumSpec& s, std::uint64_t p, int e, long terms, PrimeWorkspace* ws) {
  PrimeWorkspace local(p, 2);
  PrimeWorkspace& w = ws ? *ws : local;
  if (w.p() != p || w.e() != 2) throw std::invalid_argument("workspace does not match p^2");
  Residue r = sum_mod(s, w, terms);
  return Residue(r.value() % ipow(p, e), ipow(p, e));
}

bool is_pow2(long n) { return n > 0 && (n & (n - 1)) == 0; }

// Evaluates a prediction and reduces it mod p^e, or explains why it cannot.
std::optional<Residue> predict(const ResidueExpr& e, const EvalContext& ctx, std::string* why) {
  BigRational v = e.eval(ctx);
  try {
    return reduce_rational(v, ipow(ctx.p, ctx.e));
  } catch (const NonInvertibleDenominator&) {
    *why = "prediction " + to_string(v) + " is not p-integral";
    return std::nullopt;
  }
}

}  // namespace

std::optional<std::size_t> select_case(const std::vector<const Condition*>& conds, std::uint64_t p, std::string* why) {
  std::optional<std::size_t> hit;
  bool ramified = false;
  for (std::size_t i = 0; i < conds.size(); ++i) {
    bool ram = false;
    if (conds[i]->holds(p, &ram)) {
      if (hit) {
        if (why) *why = "cases " + std::to_string(*hit) + " and " + std::to_string(i) + " both apply";
        return std::nullopt;
      }
      hit = i;
    }
    ramified = ramified || ram;
  }
  if (!hit && why) *why = ramified ? "ramified" : "no case applies";
  return hit;
}

CheckResult check_congruence(const Claim& c, std::uint64_t p, PrimeWorkspace* ws) {
  const auto& b = std::get<CongruenceBody>(c.body);
  CheckResult r = start(c, p, 0);
  if (!c.admissible(p)) return finish(r, Outcome::Skip, "excluded");
  std::vector<const Condition*> conds;
  for (const auto& pc : b.cases) conds.push_back(&pc.when);
  std::string why;
  auto idx = select_case(conds, p, &why);
  if (!idx) return finish(r, why == "ramified" ? Outcome::Skip : Outcome::Error, why);

  Residue lhs(0, 1);
  try {
    lhs = sum_at(b.sum, p, b.e, static_cast<long>(p), ws);
  } catch (const NonInvertibleDenominator& ex) {
    return finish(r, Outcome::Skip, std::string("denominator not invertible: ") + ex.what());
  }
  auto rhs = predict(b.cases[*idx].value, EvalContext{p, b.e, std::nullopt}, &why);
  if (!rhs) return finish(r, Outcome::Error, why);
  r.data = {{"modulus", lhs.modulus()}, {"case", *idx}, {"sum", lhs.value()}, {"prediction", rhs->value()},
            {"expr", b.cases[*idx].value.text()}};
  return finish(r, lhs == *rhs ? Outcome::Pass : Outcome::Fail);
}

CheckResult check_quadform(const Claim& c, std::uint64_t p, PrimeWorkspace* ws) {
  const auto& b = std::get<QuadFormBody>(c.body);
  CheckResult r = start(c, p, 0);
  if (!c.admissible(p)) return finish(r, Outcome::Skip, "excluded");
  std::vector<const Condition*> conds;
  for (const auto& qc : b.cases) conds.push_back(&qc.when);
  std::string why;
  auto idx = select_case(conds, p, &why);
  if (!idx) return finish(r, why == "ramified" ? Outcome::Skip : Outcome::Error, why);
  const QuadCase& qc = b.cases[*idx];

  EvalContext ctx{p, b.e, std::nullopt};
  Json rep = nullptr;
  if (qc.form) {
    const std::uint64_t target = qc.form->doubled ? 2 * p : p;
    std::optional<QuadRep> q;
    try {
      q = represent(qc.form->A, qc.form->d, target);
    } catch (const std::invalid_argument& ex) {
      return finish(r, Outcome::Error, std::string("representation undefined: ") + ex.what());
    }
    if (!q) {
      return finish(r, Outcome::Error,
                    "RepresentationNotFound: " + std::to_string(target) + " = " + std::to_string(qc.form->A) +
                        "x^2 + " + std::to_string(qc.form->d) + "y^2");
    }
    ctx.x = BigInt(std::to_string(q->x));
    rep = {{"x", q->x}, {"y", q->y}, {"A", q->A}, {"d", q->d}, {"target", target}};
  }

  Residue sum(0, 1);
  try {
    sum = sum_at(b.sum, p, b.e, static_cast<long>(p), ws);
  } catch (const NonInvertibleDenominator& ex) {
    return finish(r, Outcome::Skip, std::string("denominator not invertible: ") + ex.what());
  }
  const std::uint64_t m = sum.modulus();
  Residue twist = reduce_rational(b.twist.eval(ctx), m);
  Residue lhs = twist * sum;
  auto rhs = predict(qc.value, ctx, &why);
  if (!rhs) return finish(r, Outcome::Error, why);
  r.data = {{"modulus", m}, {"case", *idx}, {"sum", sum.value()}, {"twisted_sum", lhs.value()},
            {"prediction", rhs->value()}, {"expr", qc.value.text()}};
  if (!rep.is_null()) r.data["representation"] = rep;
  return finish(r, lhs == *rhs ? Outcome::Pass : Outcome::Fail);
}

CheckResult check_relation(const Claim& c, std::uint64_t p, PrimeWorkspace* ws) {
  const auto& b = std::get<RelationBody>(c.body);
  CheckResult r = start(c, p, 0);
  if (!c.admissible(p)) return finish(r, Outcome::Skip, "excluded");
  const BigInt P(std::to_string(p));
  if (b.x.get_num() % P == 0) return finish(r, Outcome::Skip, "x = 0 mod p");
  if (b.x.get_den() % P == 0) return finish(r, Outcome::Skip, "x is not a p-adic integer");
  const SumSpec lhs_spec{series::KindW{1 - 1 / b.x}, BigInt(0), BigInt(1), 4 * b.x};
  const SumSpec rhs_spec{series::KindS{4 * b.x - 4}, BigInt(0), BigInt(1), BigRational(1)};
  Residue lhs(0, 1), rhs(0, 1);
  try {
    lhs = sum_at(lhs_spec, p, b.e, static_cast<long>(p), ws);
    rhs = sum_at(rhs_spec, p, b.e, static_cast<long>(p), ws);
  } catch (const NonInvertibleDenominator& ex) {
    return finish(r, Outcome::Skip, std::string("denominator not invertible: ") + ex.what());
  }
  r.data = {{"modulus", lhs.modulus()}, {"x", to_string(b.x)}, {"w_side", lhs.value()}, {"s_side", rhs.value()}};
  return finish(r, lhs == rhs ? Outcome::Pass : Outcome::Fail);
}

CheckResult check_at_prime(const Claim& c, std::uint64_t p, PrimeWorkspace* ws) {
  switch (c.body.index()) {
    case 0:
      return check_congruence(c, p, ws);
    case 1:
      return check_quadform(c, p, ws);
    case 4:
      return check_relation(c, p, ws);
    default:
      throw std::invalid_argument("check_at_prime: claim '" + c.id + "' is not indexed by primes");
  }
}

BigRational divisibility_value(const DivisibilityBody& b, long n) {
  if (n < 1) throw std::invalid_argument("divisibility_value: n must be positive");
  BigInt divisor = b.coef * n;
  if (b.binom == Binom::Central) divisor *= binomial(2 * n, n);
  if (b.binom == Binom::CentralOdd) divisor *= binomial(2 * n - 1, n - 1);
  BigRational sum = 0;
  BigInt mpow = 1;  // m^(n-1-k), accumulated from k = n-1 down
  for (long k = n - 1; k >= 0; --k) {
    BigInt w = mpow * pow(b.g, static_cast<unsigned long>(k));
    sum += BigRational(b.a * k + b.b) * series::term_value(b.term, k) * BigRational(w);
    mpow *= b.m;
  }
  BigRational v = pow(b.c, n - 1) * sum / BigRational(divisor);
  v.canonicalize();
  return v;
}

CheckResult check_divisibility(const Claim& c, long n) {
  const auto& b = std::get<DivisibilityBody>(c.body);
  CheckResult r = start(c, 0, n);
  if (n < b.n_min) return finish(r, Outcome::Skip, "n below n_min");
  const BigRational v = divisibility_value(b, n);
  const std::string text = to_string(v);
  r.data = {{"digits", text.size()}, {"value", text.size() <= 60 ? text : text.substr(0, 25) + "..." + text.substr(text.size() - 25)}};
  if (!is_integer(v)) return finish(r, Outcome::Fail, "not an integer");
  if (v <= 0) return finish(r, Outcome::Fail, "not positive");
  const BigInt z = v.get_num();
  const bool odd = mpz_odd_p(z.get_mpz_t()) != 0;
  switch (b.parity) {
    case Parity::None:
      break;
    case Parity::OddIffPow2:
      if (odd != is_pow2(n)) return finish(r, Outcome::Fail, odd ? "odd but n is not a power of 2" : "even but n is a power of 2");
      break;
    case Parity::OddIffPow2Plus1:
      if (odd != is_pow2(n - 1)) return finish(r, Outcome::Fail, odd ? "odd but n-1 is not a power of 2" : "even but n-1 is a power of 2");
      break;
    case Parity::Mod8Is5: {
      BigInt rem = z % 8;
      if (rem != 5) return finish(r, Outcome::Fail, "value mod 8 is " + to_string(rem));
      break;
    }
  }
  return finish(r, Outcome::Pass);
}

bool lift_applies(const Claim& c, std::uint64_t p) {
  if (!c.admissible(p)) return false;
  return std::get<LiftBody>(c.body).when.holds(p);
}

CheckResult check_lift(const Claim& c, std::uint64_t p, long n, long cost_cap) {
  const auto& b = std::get<LiftBody>(c.body);
  CheckResult r = start(c, p, n);
  if (!c.admissible(p)) return finish(r, Outcome::Skip, "excluded");
  if (!b.when.holds(p)) return finish(r, Outcome::Skip, "condition " + b.when.text() + " fails");
  const long pn = static_cast<long>(p) * n;
  if (pn > cost_cap) {
    throw CostCap("check_lift: p*n = " + std::to_string(pn) + " exceeds the cost cap " + std::to_string(cost_cap));
  }
  const long ref_terms = b.ref_p ? static_cast<long>(p) : n;

  const BigRational inv_base = 1 / b.sum.base;
  BigRational scale = 1, sum = 0, ref = 0;
  for (long k = 0; k < pn; ++k) {
    if (k == ref_terms) ref = sum;
    sum += BigRational(b.sum.a * k + b.sum.b) * series::term_value(b.sum.term, k) * scale;
    scale *= inv_base;
  }
  if (ref_terms >= pn) ref = sum;

  const BigRational eps = b.twist.eval(EvalContext{p, 2, std::nullopt});
  BigRational delta = sum - eps * BigRational(BigInt(std::to_string(p))) * ref;
  delta.canonicalize();
  int need = 2 * (1 + padic_val(BigInt(n), p));
  if (b.central) need += padic_val(binomial(2 * n, n), p);
  r.data = {{"required", need}, {"epsilon", to_string(eps)}, {"terms", pn}};
  if (delta == 0) {
    r.data["valuation"] = "inf";
    return finish(r, Outcome::Pass);
  }
  const int v = padic_val(delta, p);
  r.data["valuation"] = v;
  return finish(r, v >= need ? Outcome::Pass : Outcome::Fail);
}

}  // namespace pisl::cong
