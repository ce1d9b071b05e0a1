#pragma once

// Representations target = A*x^2 + d*y^2 with target = p or 2p, p an odd prime.

#include <cstdint>
#include <optional>

namespace pisl {

struct QuadRep {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t A = 1;
  std::uint64_t d = 0;
  std::uint64_t target = 0;

  bool holds() const {
    return static_cast<unsigned __int128>(A) * x * x + static_cast<unsigned __int128>(d) * y * y == target;
  }
};

/// Solves A*x^2 + d*y^2 = target for x, y >= 0, with target = p or 2p
/// (p an odd prime, p not dividing 2*A*d); at most one solution exists up to
/// signs except for A = d = 1, where the solution with smaller x is returned.
///
/// Square roots of -d/A mod p come from Tonelli-Shanks; the solution is then
/// the shortest vector of the lattice {x = r*y (mod p)} (intersected with the
/// index-2 sublattice where the form is even, for 2p), found by Lagrange
/// reduction. For A = 1 this is Cornacchia's descent.
///
/// Throws std::invalid_argument when target does not have that shape.
std::optional<QuadRep> represent(std::uint64_t A, std::uint64_t d, std::uint64_t target);

/// x^2 + d*y^2 = target.
inline std::optional<QuadRep> cornacchia(std::uint64_t d, std::uint64_t target) { return represent(1, d, target); }

}  // namespace pisl
