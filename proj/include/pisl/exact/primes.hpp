#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace pisl {

/// Deterministic Miller-Rabin; exact for n < 3.3e14 (bases 2..17).
bool is_prime(std::uint64_t n);

/// Primes in [lo, hi] not in `excluded`, ascending. Requires lo <= hi.
std::vector<std::uint64_t> primes_in(std::int64_t lo, std::int64_t hi,
                                     const std::set<std::uint64_t>& excluded = {});

}  // namespace pisl
