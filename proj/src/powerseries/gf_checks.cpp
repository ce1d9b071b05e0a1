#include "pisl/powerseries/gf_checks.hpp"

#include "pisl/sequences/sequences.hpp"

#include <stdexcept>

namespace pisl {

TruncatedSeries lhs_gf_W(long order, bool weighted) {
  if (order < 0) throw std::invalid_argument("lhs_gf_W: negative order");
  TruncatedSeries total(order);
  std::vector<TruncatedSeries> upow;  // upow[e] = (1+4z)^(-e)
  upow.reserve(static_cast<std::size_t>(2 * order) + 2);
  upow.emplace_back(std::vector<BigRational>{BigRational(1)}, order);
  for (long e = 1; e <= 2 * order + 1; ++e) upow.push_back(ts_inv_pow_1p4z(e, order));

  for (long k = 0; k <= order; ++k) {
    if (weighted && k == 0) continue;
    std::vector<BigInt> c = seq::w_coefficients(k);
    TruncatedSeries inner(order);
    for (long j = 0; j <= k; ++j) inner = ts_add(inner, ts_scale(upow[k + 1 + j], BigRational(c[j])));
    if (weighted) inner = ts_scale(inner, BigRational(k));
    total = ts_add(total, ts_shift(inner, k));
  }
  return total;
}

seq::CheckReport check_w_generating_functions(long order) {
  seq::CheckReport r{"W generating functions", true, order, std::nullopt, ""};
  TruncatedSeries plain = lhs_gf_W(order, false);
  TruncatedSeries weighted = lhs_gf_W(order, true);
  for (long n = 0; n <= order; ++n) {
    BigInt f = seq::f4(n);
    BigInt expect_w = BigInt(n) * (f + 4 * seq::s_seq(n));
    if (plain[n] != BigRational(f) || weighted[n] != BigRational(expect_w)) {
      r.pass = false;
      r.first_failure = n;
      r.detail = "coefficient mismatch at z^" + std::to_string(n);
      return r;
    }
  }
  r.detail = "coefficients match to order " + std::to_string(order);
  return r;
}

TruncatedSeries ziden_rhs(const std::vector<BigInt>& f, long order) {
  if (static_cast<long>(f.size()) < order + 1) throw std::invalid_argument("ziden_rhs: f4 table too short");
  TruncatedSeries out(order);
  for (long k = 0; k <= order; ++k) {
    // f_k z^k (5k + (12k+20) z + (-32k-24) z^2)
    const BigRational fk(f[k]);
    out[k] += fk * (5 * k);
    if (k + 1 <= order) out[k + 1] += fk * (12 * k + 20);
    if (k + 2 <= order) out[k + 2] += fk * (-32 * k - 24);
  }
  return out;
}

TruncatedSeries ziden_lhs(long order) {
  TruncatedSeries factor(std::vector<BigRational>{BigRational(5), BigRational(-20)}, order);
  return ts_mul(factor, lhs_gf_W(order, true));
}

seq::CheckReport verify_ziden(long order) { return verify_ziden(seq::f4_table(order), order); }

seq::CheckReport verify_ziden(const std::vector<BigInt>& f, long order) {
  if (order < 2) throw std::invalid_argument("verify_ziden: order < 2");
  seq::CheckReport r{"z-identity", true, order, std::nullopt, ""};
  TruncatedSeries lhs = ziden_lhs(order);
  TruncatedSeries rhs = ziden_rhs(f, order);
  for (long n = 0; n <= order; ++n) {
    if (lhs[n] != rhs[n]) {
      r.pass = false;
      r.first_failure = n;
      r.detail = "coefficient mismatch at z^" + std::to_string(n) + ": " + to_string(lhs[n]) + " vs " + to_string(rhs[n]);
      return r;
    }
  }
  r.detail = "both sides agree to order " + std::to_string(order);
  return r;
}

}  // namespace pisl
