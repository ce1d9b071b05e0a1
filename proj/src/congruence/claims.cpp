#include "pisl/congruence/claims.hpp"

#include "pisl/series/registry.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pisl::cong {

bool Condition::holds(std::uint64_t p, bool* ramified) const {
  if (ramified) *ramified = false;
  bool ok = true;
  if (mod != 0) {
    const long r = static_cast<long>(p % static_cast<std::uint64_t>(mod));
    ok = std::find(in.begin(), in.end(), r) != in.end();
  }
  for (const auto& [expr, want] : symbols) {
    BigRational v = expr.eval(EvalContext{p, 1, std::nullopt});
    if (v == 0 && ramified) *ramified = true;
    ok = ok && v == want;
  }
  return ok;
}

std::string Condition::text() const {
  std::ostringstream os;
  bool first = true;
  if (mod != 0) {
    os << "p mod " << mod << " in {";
    for (std::size_t i = 0; i < in.size(); ++i) os << (i ? "," : "") << in[i];
    os << "}";
    first = false;
  }
  for (const auto& [expr, want] : symbols) {
    os << (first ? "" : ", ") << expr.text() << "=" << want;
    first = false;
  }
  return first ? "always" : os.str();
}

std::string Claim::kind() const {
  static const char* names[] = {"congruence", "quadform", "divisibility", "lift", "relation"};
  return names[body.index()];
}

namespace {

[[noreturn]] void bad(const std::string& id, const std::string& what) {
  throw std::invalid_argument("claim '" + id + "': " + what);
}

Condition condition_from_json(const Json& j, const std::string& id) {
  Condition c;
  if (j.is_null()) return c;
  if (!j.is_object()) bad(id, "condition must be an object");
  if (j.contains("mod")) {
    c.mod = j.at("mod").get<long>();
    if (c.mod <= 0) bad(id, "condition mod must be positive");
    c.in = j.at("in").get<std::vector<long>>();
  }
  if (j.contains("symbols")) {
    for (const auto& [text, want] : j.at("symbols").items()) {
      ResidueExpr e = ResidueExpr::parse(text);
      if (e.uses_x()) bad(id, "condition symbols may not use x");
      c.symbols.emplace_back(e, want.get<int>());
    }
  }
  return c;
}

SumSpec sum_from_json(const Json& j, const std::vector<series::SeriesEntry>& reg, const std::string& id) {
  SumSpec s;
  if (j.contains("series")) {
    const std::string sid = j.at("series").get<std::string>();
    const series::SeriesEntry* e = series::find_entry(reg, sid);
    if (!e) bad(id, "unknown series '" + sid + "'");
    s = spec_of(*e);
  } else if (!j.contains("term_kind") || !j.contains("a") || !j.contains("b") || !j.contains("base")) {
    bad(id, "sum needs a series reference or term_kind, a, b, base");
  }
  if (j.contains("term_kind")) s.term = series::term_kind_from_json(j.at("term_kind"));
  if (j.contains("a")) s.a = series::json_integer(j.at("a"));
  if (j.contains("b")) s.b = series::json_integer(j.at("b"));
  if (j.contains("base")) s.base = series::json_rational(j.at("base"));
  if (s.base == 0) bad(id, "sum base 0");
  return s;
}

int exponent_from_json(const Json& j, const std::string& id) {
  int e = j.value("e", 2);
  if (e < 1 || e > 2) bad(id, "e must be 1 or 2");
  return e;
}

Binom parse_binom(const std::string& s, const std::string& id) {
  if (s == "none") return Binom::None;
  if (s == "C(2n,n)") return Binom::Central;
  if (s == "C(2n-1,n-1)") return Binom::CentralOdd;
  bad(id, "unknown binom '" + s + "'");
}

Parity parse_parity(const std::string& s, const std::string& id) {
  if (s == "none") return Parity::None;
  if (s == "odd_iff_pow2") return Parity::OddIffPow2;
  if (s == "odd_iff_pow2_plus1") return Parity::OddIffPow2Plus1;
  if (s == "mod8_is_5") return Parity::Mod8Is5;
  bad(id, "unknown parity rule '" + s + "'");
}

}  // namespace

Claim claim_from_json(const Json& j, const std::vector<series::SeriesEntry>& reg) {
  Claim c;
  c.id = j.at("id").get<std::string>();
  const std::string& id = c.id;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    c.family = j.value("family", std::string());
    const std::string reading = j.value("reading", std::string("primary"));
    if (reading != "primary" && reading != "alternate") bad(id, "reading must be primary or alternate");
    c.primary = reading == "primary";
    c.flag = j.value("flag", std::string());
    for (auto p : j.value("excluded", std::vector<std::uint64_t>{})) c.excluded.insert(p);
    c.p_min = j.value("p_min", std::uint64_t{2});

    if (kind == "congruence") {
      CongruenceBody b;
      b.sum = sum_from_json(j.at("sum"), reg, id);
      b.e = exponent_from_json(j, id);
      for (const auto& cj : j.at("cases")) {
        PredictionCase pc{condition_from_json(cj.value("when", Json()), id), ResidueExpr::parse(cj.at("value").get<std::string>())};
        if (pc.value.uses_x()) bad(id, "congruence predictions may not use x");
        b.cases.push_back(std::move(pc));
      }
      if (b.cases.empty()) bad(id, "no cases");
      c.body = std::move(b);
    } else if (kind == "quadform") {
      QuadFormBody b;
      b.sum = sum_from_json(j.at("sum"), reg, id);
      b.e = exponent_from_json(j, id);
      b.twist = ResidueExpr::parse(j.value("twist", std::string("1")));
      for (const auto& cj : j.at("cases")) {
        QuadCase qc;
        qc.when = condition_from_json(cj.value("when", Json()), id);
        qc.value = ResidueExpr::parse(cj.at("value").get<std::string>());
        if (cj.contains("form")) {
          const Json& f = cj.at("form");
          const std::string target = f.value("target", std::string("p"));
          if (target != "p" && target != "2p") bad(id, "form target must be p or 2p");
          qc.form = QuadForm{f.at("A").get<std::uint64_t>(), f.at("d").get<std::uint64_t>(), target == "2p"};
        } else if (qc.value.uses_x()) {
          bad(id, "a case without a form may not use x");
        }
        b.cases.push_back(std::move(qc));
      }
      if (b.cases.empty()) bad(id, "no cases");
      c.body = std::move(b);
    } else if (kind == "divisibility") {
      DivisibilityBody b;
      b.term = series::term_kind_from_json(j.at("term_kind"));
      b.a = series::json_integer(j.at("a"));
      b.b = series::json_integer(j.at("b"));
      b.m = series::json_integer(j.at("m"));
      if (j.contains("g")) b.g = series::json_integer(j.at("g"));
      if (j.contains("c")) b.c = series::json_rational(j.at("c"));
      if (j.contains("coef")) b.coef = series::json_integer(j.at("coef"));
      if (b.coef <= 0) bad(id, "coef must be positive");
      b.binom = parse_binom(j.value("binom", std::string("none")), id);
      b.n_min = j.value("n_min", 1L);
      if (b.n_min < 1) bad(id, "n_min must be positive");
      b.parity = parse_parity(j.value("parity", std::string("none")), id);
      c.body = std::move(b);
    } else if (kind == "lift") {
      LiftBody b;
      b.sum = sum_from_json(j.at("sum"), reg, id);
      b.when = condition_from_json(j.value("when", Json()), id);
      b.twist = ResidueExpr::parse(j.value("twist", std::string("1")));
      const std::string divisor = j.value("divisor", std::string("pn2"));
      if (divisor != "pn2" && divisor != "pn2_central") bad(id, "divisor must be pn2 or pn2_central");
      b.central = divisor == "pn2_central";
      const std::string ref = j.value("ref", std::string("n"));
      if (ref != "n" && ref != "p") bad(id, "ref must be n or p");
      b.ref_p = ref == "p";
      c.body = std::move(b);
    } else if (kind == "relation") {
      RelationBody b;
      b.x = series::json_rational(j.at("x"));
      if (b.x == 0) bad(id, "x must be nonzero");
      b.e = exponent_from_json(j, id);
      c.body = std::move(b);
    } else {
      bad(id, "unknown kind '" + kind + "'");
    }
  } catch (const nlohmann::json::exception& ex) {
    bad(id, ex.what());
  }
  return c;
}

std::vector<Claim> parse_claims(const Json& j, const std::vector<series::SeriesEntry>& reg) {
  if (!j.is_array()) throw std::invalid_argument("claims file must be a JSON array");
  std::vector<Claim> out;
  std::set<std::string> seen;
  for (const auto& cj : j) {
    out.push_back(claim_from_json(cj, reg));
    if (!seen.insert(out.back().id).second) throw std::invalid_argument("duplicate claim id '" + out.back().id + "'");
  }
  return out;
}

std::vector<Claim> load_claims(const std::string& path, const std::vector<series::SeriesEntry>& reg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open claims file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument("claims file '" + path + "': " + ex.what());
  }
  return parse_claims(j, reg);
}

std::string default_claims_path() { return series::default_data_dir() + "/claims.json"; }

std::vector<const Claim*> select_claims(const std::vector<Claim>& claims, const std::string& selector) {
  std::vector<std::string> parts;
  std::stringstream ss(selector);
  for (std::string s; std::getline(ss, s, ',');) {
    if (!s.empty()) parts.push_back(s);
  }
  if (parts.empty()) throw std::invalid_argument("empty claim selector");
  std::vector<const Claim*> out;
  for (const auto& part : parts) {
    bool any = false;
    for (const auto& c : claims) {
      if (part == "all" || c.id == part || c.family == part || c.kind() == part) {
        if (std::find(out.begin(), out.end(), &c) == out.end()) out.push_back(&c);
        any = true;
      }
    }
    if (!any) throw std::invalid_argument("no claim matches '" + part + "'");
  }
  return out;
}

}  // namespace pisl::cong
