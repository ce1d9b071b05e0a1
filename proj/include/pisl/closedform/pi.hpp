#pragma once

#include "pisl/closedform/bigfloat.hpp"

namespace pisl {

/// pi to `digits` significant digits (1 <= digits <= 10000) by binary splitting
/// of the Chudnovsky series. Throws std::invalid_argument outside that range.
BigFloat pi(long digits);

}  // namespace pisl
