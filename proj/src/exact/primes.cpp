#include "pisl/exact/primes.hpp"

#include "pisl/exact/modular.hpp"

#include <stdexcept>

namespace pisl {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17};
  for (auto q : small) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) { d /= 2; ++s; }
  for (auto a : small) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in(std::int64_t lo, std::int64_t hi, const std::set<std::uint64_t>& excluded) {
  if (lo > hi) throw std::invalid_argument("primes_in: lo > hi");
  std::vector<std::uint64_t> out;
  for (std::int64_t n = lo < 2 ? 2 : lo; n <= hi; ++n) {
    auto u = static_cast<std::uint64_t>(n);
    if (is_prime(u) && !excluded.contains(u)) out.push_back(u);
  }
  return out;
}

}  // namespace pisl
