#include "pisl/series/term_kind.hpp"

#include "pisl/sequences/sequences.hpp"

#include <stdexcept>
#include <vector>

namespace pisl::series {
namespace {

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

// C(2j, j) for j = 0..n
std::vector<BigInt> central_row(long n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (long j = 0; j < n; ++j) {
    c[j + 1] = c[j] * (2 * (2 * j + 1));
    mpz_divexact_ui(c[j + 1].get_mpz_t(), c[j + 1].get_mpz_t(), static_cast<unsigned long>(j + 1));
  }
  return c;
}

BigRational recip_term(long n, const BigRational& x) {
  std::vector<BigInt> cb = central_row(n);
  BigRational s = 0;
  BigRational xpow = 1;
  for (long k = 0; k <= n; ++k) {
    BigInt num = cb[k] * cb[k] * cb[n - k] * cb[n - k];
    s += xpow * BigRational(num, binomial(n, k));
    xpow *= x;
  }
  s.canonicalize();
  return BigRational(s * cb[n]);
}

BigRational conv12_term(long n, const BigRational& y) {
  std::vector<BigInt> cb = central_row(n);
  // sum_k C(2k,k)^2 C(2(n-k),n-k) y^(n-k), then times C(2n,n)
  std::vector<BigInt> poly(static_cast<std::size_t>(n) + 1);  // coefficient of y^i, i = n-k
  for (long k = 0; k <= n; ++k) poly[n - k] = cb[k] * cb[k] * cb[n - k];
  return BigRational(seq::eval_poly(poly, y) * cb[n]);
}

}  // namespace

BigRational term_value(const TermKind& kind, long k) {
  if (k < 0) throw std::invalid_argument("term_value: negative index");
  return std::visit(
      Overload{
          [&](const KindW& w) { return seq::w_fast(k, w.x); },
          [&](const KindF4&) { return BigRational(seq::f4(k)); },
          [&](const KindB2kTT& t) {
            return BigRational(binomial(2 * k, k) * seq::T_tri(k, t.b1, t.c1) * seq::T_tri(k, t.b2, t.c2));
          },
          [&](const KindB2k2T& t) {
            BigInt c = binomial(2 * k, k);
            return BigRational(c * c * seq::T_tri(k, t.b, t.c));
          },
          [&](const KindB2kF& f) { return BigRational(binomial(2 * k, k) * seq::F_poly(k, f.x)); },
          [&](const KindFOnly& f) { return seq::F_poly(k, f.x); },
          [&](const KindRecip& r) { return recip_term(k, r.x); },
          [&](const KindConv12& c) { return conv12_term(k, c.y); },
          [&](const KindS& s) { return seq::S_poly(k, s.y); },
      },
      kind);
}

std::string kind_name(const TermKind& kind) {
  return std::visit(Overload{
                        [](const KindW&) { return std::string("W"); },
                        [](const KindF4&) { return std::string("F4"); },
                        [](const KindB2kTT&) { return std::string("B2k_TT"); },
                        [](const KindB2k2T&) { return std::string("B2k2_T"); },
                        [](const KindB2kF&) { return std::string("B2k_F"); },
                        [](const KindFOnly&) { return std::string("F_only"); },
                        [](const KindRecip&) { return std::string("B2n_conv_recip"); },
                        [](const KindConv12&) { return std::string("B2n_conv12"); },
                        [](const KindS&) { return std::string("S_poly"); },
                    },
                    kind);
}

std::string describe(const TermKind& kind) {
  auto q = [](const BigRational& v) { return to_string(v); };
  auto z = [](const BigInt& v) { return to_string(v); };
  return std::visit(
      Overload{
          [&](const KindW& w) { return "W_k(" + q(w.x) + ")"; },
          [&](const KindF4&) { return std::string("f_k^(4)"); },
          [&](const KindB2kTT& t) {
            return "C(2k,k) T_k(" + z(t.b1) + "," + z(t.c1) + ") T_k(" + z(t.b2) + "," + z(t.c2) + ")";
          },
          [&](const KindB2k2T& t) { return "C(2k,k)^2 T_k(" + z(t.b) + "," + z(t.c) + ")"; },
          [&](const KindB2kF& f) { return "C(2k,k) F_k(" + q(f.x) + ")"; },
          [&](const KindFOnly& f) { return "F_k(" + q(f.x) + ")"; },
          [&](const KindRecip& r) { return "C(2n,n) sum_k (" + q(r.x) + ")^k C(2k,k)^2 C(2n-2k,n-k)^2 / C(n,k)"; },
          [&](const KindConv12& c) { return "C(2n,n) sum_k C(2k,k)^2 C(2n-2k,n-k) (" + q(c.y) + ")^(n-k)"; },
          [&](const KindS& s) { return "S_k(" + q(s.y) + ")"; },
      },
      kind);
}

}  // namespace pisl::series
