#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support.hpp"
#include "pisl/closedform/pi.hpp"
#include "pisl/sequences/sequences.hpp"
#include "pisl/series/registry.hpp"
#include "pisl/series/transform.hpp"

#include <set>

using namespace pisl;
using namespace pisl::series;

namespace {

const char* kProvenW[] = {"W2", "W3", "W6", "W8", "W12", "W15"};
const char* kF4[] = {"F4-36", "F4-m64", "F4-196", "F4-m324", "F4-1296", "F4-5776"};

}  // namespace

TEST_CASE("registry shape") {
  const auto& reg = test::registry();
  CHECK(reg.size() == 35);
  std::set<std::string> ids;
  for (const auto& e : reg) ids.insert(e.id);
  CHECK(ids.size() == reg.size());
  std::size_t unproven = 0;
  for (const auto& e : reg) unproven += e.status != Status::Proven;
  CHECK(unproven == 21);
  // Round trip through JSON.
  for (const auto& e : reg) {
    const auto back = entry_from_json(to_json(e));
    CHECK(back.id == e.id);
    CHECK(back.a == e.a);
    CHECK(back.base == e.base);
    CHECK(back.term == e.term);
    CHECK(back.rhs == e.rhs);
  }
}

TEST_CASE("malformed registry input") {
  Json good = to_json(test::entry("W2"));
  Json j = good;
  j["term_kind"]["name"] = "nope";
  CHECK_THROWS_AS(entry_from_json(j), std::invalid_argument);
  j = good;
  j["base"] = "1/0";
  CHECK_THROWS(entry_from_json(j));
  j = good;
  j["rhs"] = "sqrt(";
  CHECK_THROWS_AS(entry_from_json(j), std::invalid_argument);
  CHECK_THROWS_AS(parse_registry(Json::array({good, good})), std::invalid_argument);
  CHECK(json_rational(Json("-6/4")) == BigRational(-3, 2));
  CHECK(json_integer(Json("123456789012345678901234567890")) == BigInt("123456789012345678901234567890"));
}

TEST_CASE("term values against the sequence definitions") {
  for (long k = 0; k <= 12; ++k) {
    CHECK(term_value(KindW{BigRational(9, 10)}, k) == seq::w_eval(k, BigRational(9, 10)));
    CHECK(term_value(KindF4{}, k) == BigRational(seq::f4(k)));
    CHECK(term_value(KindB2kTT{14, 1, 17, 16}, k) ==
          BigRational(binomial(2 * k, k) * seq::T_tri(k, 14, 1) * seq::T_tri(k, 17, 16)));
    CHECK(term_value(KindB2k2T{8, -2}, k) == BigRational(pow(binomial(2 * k, k), 2) * seq::T_tri(k, 8, -2)));
    CHECK(term_value(KindB2kF{BigRational(-324)}, k) == BigRational(binomial(2 * k, k)) * seq::F_poly(k, BigRational(-324)));
    CHECK(term_value(KindFOnly{BigRational(5)}, k) == seq::F_poly(k, BigRational(5)));
    CHECK(term_value(KindS{BigRational(-1, 4)}, k) == seq::S_poly(k, BigRational(-1, 4)));
    BigRational recip = 0, conv = 0;
    for (long j = 0; j <= k; ++j) {
      recip += BigRational(pow(binomial(2 * j, j), 2) * pow(binomial(2 * (k - j), k - j), 2)) /
               BigRational(binomial(k, j)) * pow(BigRational(5), j);
      conv += BigRational(pow(binomial(2 * j, j), 2) * binomial(2 * (k - j), k - j)) * pow(BigRational(12), k - j);
    }
    CHECK(term_value(KindRecip{BigRational(5)}, k) == BigRational(binomial(2 * k, k)) * recip);
    CHECK(term_value(KindConv12{BigRational(12)}, k) == BigRational(binomial(2 * k, k)) * conv);
  }
  CHECK(kind_name(KindB2kF{1}) == "B2k_F");
  CHECK(describe(KindW{BigRational(9, 10)}) == "W_k(9/10)");
}

TEST_CASE("proven W and f4 series verify at 50 digits") {
  for (const char* id : kProvenW) {
    const auto r = verify_entry(test::entry(id), 50);
    CHECK_MESSAGE(r.pass, id);
    CHECK(abs(r.diff) + r.tail < pow10(-45, 60));
  }
  for (const char* id : kF4) CHECK_MESSAGE(verify_entry(test::entry(id), 50).pass, id);
  CHECK(verify_entry(test::entry("F4-36b"), 50).pass);
}

TEST_CASE("conjectural and open series verify at 40 digits") {
  for (const auto& e : test::registry()) {
    if (e.status == Status::Proven) continue;
    CHECK_MESSAGE(verify_entry(e, 40).pass, e.id);
  }
  CHECK(verify_entry(test::entry("CC-12"), 40).pass);
}

TEST_CASE("perturbed series fail verification") {
  SeriesEntry e = test::entry("W2");
  e.b += 1;
  CHECK_FALSE(verify_entry(e, 40).pass);
  e = test::entry("BF-135/2");
  e.term = KindFOnly{BigRational(-27, 8)};
  CHECK_FALSE(verify_entry(e, 30).pass);
}

TEST_CASE("divergent series are reported") {
  SeriesEntry e = test::entry("W2");
  e.base = 10;
  CHECK_THROWS_AS(sum_series(e, 30), NonConvergent);
}

TEST_CASE("tail bounds shrink with precision") {
  for (const auto& e : test::registry()) {
    const auto lo = sum_series(e, 40), hi = sum_series(e, 60);
    // Equal when both runs stop at the minimum term count; allow rounding.
    CHECK_MESSAGE(hi.tail <= lo.tail * (BigFloat(1, 60) + pow10(-30, 60)), e.id);
  }
}

TEST_CASE("the six W -> f4 reductions") {
  const std::pair<const char*, BigRational> expect[] = {
      {"W2", BigRational(1075, 72)},           {"W3", BigRational(9225, 32)},
      {"W6", BigRational(10125, 784)},         {"W8", BigRational(5209600, 243)},
      {"W12", BigRational(1314625, 243)},      {"W15", BigRational(147758475, 1444)},
  };
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& w = test::entry(expect[i].first);
    const auto& f = test::entry(kF4[i]);
    const BigRational x = transform_point(std::get<KindW>(w.term).x);
    CHECK(w.base == 4 * x);
    const auto t = transform_W_to_f4(w.a, w.b, x);
    CHECK(t.factor_reduced == expect[i].second);
    CHECK(t.A_reduced == f.a);
    CHECK(t.B_reduced == f.b);
    CHECK(t.new_base == f.base);
    CHECK(t.in_convergence_region);
    // Raw and reduced forms describe the same multiple.
    CHECK(t.factor * t.A == t.factor_reduced * BigRational(t.A_reduced));
    // Numerical consistency of both sides at 40 digits.
    const BigFloat lhs = sum_series(w, 40).value, rhs = BigFloat(t.factor_reduced, 40) * sum_series(f, 40).value;
    CHECK(abs(lhs - rhs) < abs(lhs) * pow10(-38, 40));
  }
  CHECK_THROWS_AS(transform_W_to_f4(1, 1, BigRational(1)), std::domain_error);
  CHECK_THROWS_AS(transform_point(BigRational(1)), std::domain_error);
  CHECK(transform_point(BigRational(9, 10)) == 10);
}
