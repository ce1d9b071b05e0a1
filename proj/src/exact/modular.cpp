#include "pisl/exact/modular.hpp"

#include <utility>

namespace pisl {

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

Residue::Residue(std::uint64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("residue modulus must be positive");
  value_ = value % modulus;
}

Residue Residue::from_signed(std::int64_t value, std::uint64_t modulus) {
  auto m = static_cast<std::int64_t>(modulus);
  std::int64_t v = value % m;
  if (v < 0) v += m;
  return Residue(static_cast<std::uint64_t>(v), modulus);
}

void Residue::check_same(const Residue& o) const {
  if (o.modulus_ != modulus_) throw std::invalid_argument("residue modulus mismatch");
}

Residue Residue::operator+(const Residue& o) const {
  check_same(o);
  return Residue(addmod(value_, o.value_, modulus_), modulus_);
}
Residue Residue::operator-(const Residue& o) const {
  check_same(o);
  return Residue(submod(value_, o.value_, modulus_), modulus_);
}
Residue Residue::operator*(const Residue& o) const {
  check_same(o);
  return Residue(mulmod(value_, o.value_, modulus_), modulus_);
}
Residue Residue::operator-() const { return Residue(submod(0, value_, modulus_), modulus_); }
Residue Residue::pow(std::uint64_t e) const { return Residue(powmod(value_, e, modulus_), modulus_); }

Residue Residue::inverse() const {
  auto inv = invmod(value_, modulus_);
  if (!inv) throw NonInvertibleDenominator(std::to_string(value_) + " is not invertible mod " + std::to_string(modulus_));
  return Residue(*inv, modulus_);
}

std::string to_string(const Residue& r) {
  return std::to_string(r.value()) + " (mod " + std::to_string(r.modulus()) + ")";
}

int jacobi(const BigInt& a_in, const BigInt& n_in) {
  if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t())) throw std::invalid_argument("jacobi: n must be odd and positive");
  return mpz_jacobi(a_in.get_mpz_t(), n_in.get_mpz_t());
}

int jacobi(std::int64_t a, std::int64_t n) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("jacobi: n must be odd and positive");
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

Residue reduce_integer(const BigInt& v, std::uint64_t m) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
  return Residue(r.get_ui(), m);
}

Residue reduce_rational(const BigRational& q, std::uint64_t m) {
  Residue num = reduce_integer(q.get_num(), m);
  Residue den = reduce_integer(q.get_den(), m);
  auto inv = invmod(den.value(), m);
  if (!inv) {
    throw NonInvertibleDenominator("denominator of " + to_string(q) + " is not invertible mod " + std::to_string(m));
  }
  return num * Residue(*inv, m);
}

int padic_val(const BigInt& n, std::uint64_t p) {
  if (n == 0) throw std::domain_error("p-adic valuation of zero");
  if (p < 2) throw std::invalid_argument("padic_val: p must be prime");
  BigInt q = n;
  int v = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int padic_val(const BigRational& q, std::uint64_t p) {
  if (q == 0) throw std::domain_error("p-adic valuation of zero");
  return padic_val(BigInt(q.get_num()), p) - padic_val(BigInt(q.get_den()), p);
}

std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t r = powmod(a, (q + 1) / 2, p);
  std::uint64_t t = powmod(a, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) { t2 = mulmod(t2, t2, p); ++i; }
    std::uint64_t b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    r = mulmod(r, b, p);
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    m = i;
  }
  return r;
}

PascalTable::PascalTable(std::uint64_t modulus, int max_row)
    : modulus_(modulus), max_row_(max_row), cells_(offset(max_row + 1)) {
  if (modulus == 0 || max_row < 0) throw std::invalid_argument("PascalTable: bad arguments");
  const std::uint64_t one = 1 % modulus;
  for (long n = 0; n <= max_row; ++n) {
    std::size_t row = offset(n);
    cells_[row] = one;
    cells_[row + static_cast<std::size_t>(n)] = one;
    std::size_t prev = n > 0 ? offset(n - 1) : 0;
    for (long k = 1; k < n; ++k) {
      cells_[row + static_cast<std::size_t>(k)] =
          addmod(cells_[prev + static_cast<std::size_t>(k) - 1], cells_[prev + static_cast<std::size_t>(k)], modulus);
    }
  }
}

}  // namespace pisl
