#include "pisl/exact/quadform.hpp"

#include "pisl/exact/modular.hpp"
#include "pisl/exact/primes.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace pisl {
namespace {

using i128 = __int128;

struct Vec {
  i128 x;
  i128 y;
};

struct Form {
  i128 A;
  i128 d;
  i128 q(const Vec& v) const { return A * v.x * v.x + d * v.y * v.y; }
  i128 b(const Vec& u, const Vec& v) const { return A * u.x * v.x + d * u.y * v.y; }
};

i128 round_div(i128 num, i128 den) {
  // floor(num/den + 1/2) for den > 0
  i128 twice = 2 * num + den;
  i128 q = twice / (2 * den);
  if (twice % (2 * den) != 0 && twice < 0) --q;
  return q;
}

Vec shortest_vector(const Form& f, Vec b1, Vec b2) {
  for (;;) {
    if (f.q(b2) < f.q(b1)) std::swap(b1, b2);
    i128 mu = round_div(f.b(b1, b2), f.q(b1));
    b2 = Vec{b2.x - mu * b1.x, b2.y - mu * b1.y};
    if (f.q(b2) >= f.q(b1)) return b1;
  }
}

i128 iabs(i128 v) { return v < 0 ? -v : v; }

}  // namespace

std::optional<QuadRep> represent(std::uint64_t A, std::uint64_t d, std::uint64_t target) {
  if (A == 0 || d == 0) throw std::invalid_argument("represent: A and d must be positive");
  std::uint64_t p = 0;
  bool doubled = false;
  if (target % 2 == 1 && is_prime(target)) {
    p = target;
  } else if (target % 2 == 0 && (target / 2) % 2 == 1 && is_prime(target / 2)) {
    p = target / 2;
    doubled = true;
  } else {
    throw std::invalid_argument("represent: target " + std::to_string(target) + " is not p or 2p for an odd prime p");
  }
  if (A % p == 0 || d % p == 0) {
    throw std::invalid_argument("represent: p = " + std::to_string(p) + " divides the form coefficients");
  }

  auto inv_a = invmod(A % p, p);
  std::uint64_t minus_d = submod(0, d % p, p);
  auto r = sqrt_mod_prime(mulmod(minus_d, *inv_a, p), p);
  if (!r) return std::nullopt;

  Vec b1{static_cast<i128>(p), 0};
  Vec b2{static_cast<i128>(*r), 1};
  if (doubled) {
    // parity of A*x^2 + d*y^2 is that of A*x + d*y
    auto lambda = [&](const Vec& v) { return static_cast<int>(((A % 2) * (v.x & 1) + (d % 2) * (v.y & 1)) & 1); };
    int l1 = lambda(b1), l2 = lambda(b2);
    if (l1 == 0 && l2 == 1) {
      b2 = Vec{2 * b2.x, 2 * b2.y};
    } else if (l1 == 1 && l2 == 0) {
      b1 = Vec{2 * b1.x, 2 * b1.y};
    } else if (l1 == 1 && l2 == 1) {
      b1 = Vec{b1.x + b2.x, b1.y + b2.y};
      b2 = Vec{2 * b2.x, 2 * b2.y};
    }
  }

  Form form{static_cast<i128>(A), static_cast<i128>(d)};
  Vec v = shortest_vector(form, b1, b2);
  if (form.q(v) != static_cast<i128>(target)) return std::nullopt;

  QuadRep rep{static_cast<std::uint64_t>(iabs(v.x)), static_cast<std::uint64_t>(iabs(v.y)), A, d, target};
  if (A == d && rep.y < rep.x) std::swap(rep.x, rep.y);
  if (!rep.holds()) throw std::logic_error("represent: reduced vector does not satisfy the form");
  return rep;
}

}  // namespace pisl
