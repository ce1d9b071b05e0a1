#pragma once

// PSLQ integer relation detection (gamma = 2/sqrt(3)).

#include "pisl/closedform/bigfloat.hpp"
#include "pisl/exact/bigint.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace pisl::disc {

class PrecisionTooLow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Relation {
  std::vector<BigInt> coefficients;
  BigInt norm;  // max |coefficient|
  BigFloat residual;
};

/// Integer vector r, not all zero, with |sum r_i v_i| < 10^(-digits+15) * max|v_i|
/// and max |r_i| <= max_norm, or nullopt when the algorithm proves no relation
/// of that norm exists (or runs out of iterations).
///
/// Requires 2 <= values.size() <= 12, digits >= 30 and digits >= 10 * size
/// (PrecisionTooLow otherwise). Values are used at `digits` precision.
std::optional<Relation> pslq(const std::vector<BigFloat>& values, long digits, const BigInt& max_norm);

/// |sum r_i v_i| evaluated at the precision of the values.
BigFloat relation_residual(const std::vector<BigInt>& r, const std::vector<BigFloat>& values);

}  // namespace pisl::disc
