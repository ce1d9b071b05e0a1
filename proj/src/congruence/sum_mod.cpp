#include "pisl/congruence/sum_mod.hpp"

#include <stdexcept>
#include <type_traits>
#include <vector>

namespace pisl::cong {
namespace {

using namespace pisl::series;

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

std::vector<std::uint64_t> powers(std::uint64_t x, long count, std::uint64_t m) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(std::max(count, 1L)));
  out[0] = 1 % m;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = mulmod(out[i - 1], x, m);
  return out;
}

std::uint64_t red(const BigRational& q, std::uint64_t m) { return reduce_rational(q, m).value(); }
std::uint64_t red(const BigInt& v, std::uint64_t m) { return reduce_integer(v, m).value(); }

// T_k(b,c) for k < terms.
std::vector<std::uint64_t> trinomials(const BigInt& b, const BigInt& c, long terms, const PascalTable& C) {
  const std::uint64_t m = C.modulus();
  auto bp = powers(red(b, m), terms, m);
  auto cp = powers(red(c, m), terms, m);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(terms));
  for (long k = 0; k < terms; ++k) {
    std::uint64_t s = 0;
    for (long i = 0; 2 * i <= k; ++i) {
      std::uint64_t v = mulmod(C(k, 2 * i), C(2 * i, i), m);
      v = mulmod(v, mulmod(bp[static_cast<std::size_t>(k - 2 * i)], cp[static_cast<std::size_t>(i)], m), m);
      s = addmod(s, v, m);
    }
    out[static_cast<std::size_t>(k)] = s;
  }
  return out;
}

// t_k mod m for k < terms.
std::vector<std::uint64_t> native_terms(const TermKind& kind, long terms, const PascalTable& C) {
  const std::uint64_t m = C.modulus();
  std::vector<std::uint64_t> t(static_cast<std::size_t>(terms));
  auto at = [&](long k) -> std::uint64_t& { return t[static_cast<std::size_t>(k)]; };
  std::visit(
      Overload{
          [&](const KindW& w) {
            auto xp = powers(red(w.x, m), terms, m);
            for (long k = 0; k < terms; ++k) {
              std::uint64_t s = 0;
              for (long j = 0; j <= k; ++j) {
                std::uint64_t v = mulmod(C(k, j), C(k + j, j), m);
                v = mulmod(v, mulmod(C(2 * j, j), C(2 * k - 2 * j, k - j), m), m);
                s = addmod(s, mulmod(v, xp[static_cast<std::size_t>(j)], m), m);
              }
              at(k) = s;
            }
          },
          [&](const KindF4&) {
            for (long k = 0; k < terms; ++k) {
              std::uint64_t s = 0;
              for (long j = 0; j <= k; ++j) {
                std::uint64_t c2 = mulmod(C(k, j), C(k, j), m);
                s = addmod(s, mulmod(c2, c2, m), m);
              }
              at(k) = s;
            }
          },
          [&](const KindB2kTT& q) {
            auto t1 = trinomials(q.b1, q.c1, terms, C);
            auto t2 = trinomials(q.b2, q.c2, terms, C);
            for (long k = 0; k < terms; ++k) {
              at(k) = mulmod(C(2 * k, k), mulmod(t1[static_cast<std::size_t>(k)], t2[static_cast<std::size_t>(k)], m), m);
            }
          },
          [&](const KindB2k2T& q) {
            auto t1 = trinomials(q.b, q.c, terms, C);
            for (long k = 0; k < terms; ++k) {
              std::uint64_t c = C(2 * k, k);
              at(k) = mulmod(mulmod(c, c, m), t1[static_cast<std::size_t>(k)], m);
            }
          },
          [&](const auto& f) requires(std::is_same_v<std::decay_t<decltype(f)>, KindB2kF> ||
                                      std::is_same_v<std::decay_t<decltype(f)>, KindFOnly>) {
            constexpr bool central = std::is_same_v<std::decay_t<decltype(f)>, KindB2kF>;
            auto xp = powers(red(f.x, m), terms, m);
            for (long k = 0; k < terms; ++k) {
              std::uint64_t s = 0;
              for (long j = 0; j <= k; ++j) {
                std::uint64_t v = mulmod(C(k, j), C(k + 2 * j, 2 * j), m);
                v = mulmod(v, mulmod(C(2 * j, j), xp[static_cast<std::size_t>(k - j)], m), m);
                s = addmod(s, v, m);
              }
              at(k) = central ? mulmod(C(2 * k, k), s, m) : s;
            }
          },
          [&](const KindRecip& r) {
            auto xp = powers(red(r.x, m), terms, m);
            for (long n = 0; n < terms; ++n) {
              std::uint64_t s = 0;
              for (long k = 0; k <= n; ++k) {
                auto inv = invmod(C(n, k), m);
                if (!inv) throw NonInvertibleDenominator("sum_mod: C(" + std::to_string(n) + "," + std::to_string(k) + ") not a unit");
                std::uint64_t a = C(2 * k, k);
                std::uint64_t b = C(2 * (n - k), n - k);
                std::uint64_t v = mulmod(mulmod(a, a, m), mulmod(b, b, m), m);
                s = addmod(s, mulmod(mulmod(v, *inv, m), xp[static_cast<std::size_t>(k)], m), m);
              }
              at(n) = mulmod(C(2 * n, n), s, m);
            }
          },
          [&](const KindConv12& c) {
            auto yp = powers(red(c.y, m), terms, m);
            for (long n = 0; n < terms; ++n) {
              std::uint64_t s = 0;
              for (long k = 0; k <= n; ++k) {
                std::uint64_t a = C(2 * k, k);
                std::uint64_t v = mulmod(mulmod(a, a, m), C(2 * (n - k), n - k), m);
                s = addmod(s, mulmod(v, yp[static_cast<std::size_t>(n - k)], m), m);
              }
              at(n) = mulmod(C(2 * n, n), s, m);
            }
          },
          [&](const KindS& q) {
            auto yp = powers(red(q.y, m), terms, m);
            for (long k = 0; k < terms; ++k) {
              std::uint64_t s = 0;
              for (long j = 0; j <= k; ++j) {
                std::uint64_t c2 = mulmod(C(k, j), C(k, j), m);
                s = addmod(s, mulmod(mulmod(c2, c2, m), yp[static_cast<std::size_t>(j)], m), m);
              }
              at(k) = s;
            }
          },
      },
      kind);
  return t;
}

}  // namespace

SumSpec spec_of(const series::SeriesEntry& e) { return SumSpec{e.term, e.a, e.b, e.base}; }

PrimeWorkspace::PrimeWorkspace(std::uint64_t p, int e) : p_(p), e_(e), m_(1) {
  if (e < 1 || e > 3) throw std::invalid_argument("PrimeWorkspace: exponent must lie in [1, 3]");
  for (int i = 0; i < e; ++i) m_ *= p;
}

const PascalTable& PrimeWorkspace::rows(int max_row) {
  if (!table_ || table_->max_row() < max_row) {
    int grow = table_ ? std::max(max_row, 2 * table_->max_row()) : max_row;
    table_ = std::make_unique<PascalTable>(m_, grow);
  }
  return *table_;
}

int rows_needed(const series::TermKind& kind, long terms) {
  const long last = std::max(terms - 1, 0L);
  if (std::holds_alternative<KindB2kF>(kind) || std::holds_alternative<KindFOnly>(kind)) return static_cast<int>(3 * last);
  return static_cast<int>(2 * last);
}

Residue sum_mod_native(const SumSpec& s, PrimeWorkspace& ws, long terms) {
  if (terms < 0) throw std::invalid_argument("sum_mod: negative term count");
  const std::uint64_t m = ws.modulus();
  if (s.base == 0) throw std::domain_error("sum_mod: base 0");
  const std::uint64_t inv_base = red(1 / s.base, m);
  const std::uint64_t a = red(s.a, m);
  const std::uint64_t b = red(s.b, m);
  if (terms == 0) return Residue(0, m);
  const auto t = native_terms(s.term, terms, ws.rows(rows_needed(s.term, terms)));
  std::uint64_t scale = 1 % m;
  std::uint64_t sum = 0;
  for (long k = 0; k < terms; ++k) {
    std::uint64_t lin = addmod(mulmod(a, static_cast<std::uint64_t>(k) % m, m), b, m);
    sum = addmod(sum, mulmod(mulmod(lin, t[static_cast<std::size_t>(k)], m), scale, m), m);
    scale = mulmod(scale, inv_base, m);
  }
  return Residue(sum, m);
}

BigRational sum_exact(const SumSpec& s, long terms) {
  if (s.base == 0) throw std::domain_error("sum_exact: base 0");
  const BigRational inv_base = 1 / s.base;
  BigRational scale = 1;
  BigRational sum = 0;
  for (long k = 0; k < terms; ++k) {
    sum += BigRational(s.a * k + s.b) * series::term_value(s.term, k) * scale;
    scale *= inv_base;
  }
  sum.canonicalize();
  return sum;
}

Residue sum_mod_exact(const SumSpec& s, std::uint64_t p, int e, long terms) {
  std::uint64_t m = 1;
  for (int i = 0; i < e; ++i) m *= p;
  return reduce_rational(sum_exact(s, terms), m);
}

Residue sum_mod(const SumSpec& s, PrimeWorkspace& ws, long terms) {
  if (std::holds_alternative<KindRecip>(s.term)) return sum_mod_exact(s, ws.p(), ws.e(), terms);
  return sum_mod_native(s, ws, terms);
}

Residue sum_mod(const SumSpec& s, std::uint64_t p, int e, long n) {
  if (n < 1) throw std::invalid_argument("sum_mod: n must be positive");
  PrimeWorkspace ws(p, e);
  return sum_mod(s, ws, static_cast<long>(p) * n);
}

}  // namespace pisl::cong
