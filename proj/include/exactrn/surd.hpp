#pragma once

#include "exactrn/rat.hpp"

namespace exactrn {

/// Decides sqrt(a) <= b without materializing the root: true iff b >= 0 and
/// a <= b^2. Requires a >= 0.
bool sqrt_leq(const Rat& a, const Rat& b);

/// Decides sqrt(c) <= sqrt(a) + sqrt(b) exactly. Requires a, b, c >= 0.
/// With t = c - a - b this is equivalent to t <= 0, or else t^2 <= 4ab.
bool sqrt_sum_leq(const Rat& c, const Rat& a, const Rat& b);

/// Equality case of sqrt_sum_leq: sqrt(c) == sqrt(a) + sqrt(b), i.e. t >= 0
/// and t^2 == 4ab. Requires a, b, c >= 0.
bool sqrt_sum_eq(const Rat& c, const Rat& a, const Rat& b);

/// Nonnegative r with |r - sqrt(a)| <= 2^-p. Display helper and test oracle;
/// no decision procedure depends on it. Requires a >= 0 and p >= 1.
Rat approx_sqrt(const Rat& a, unsigned precision_bits);

}  // namespace exactrn
