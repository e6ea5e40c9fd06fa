#pragma once

#include <cstdint>

namespace divl1 {

// Largest n for which all C(n, k) fit in a signed 64-bit integer.
inline constexpr int kMaxBinomialN = 64;

// C(a, b) in exact integer arithmetic from a precomputed Pascal triangle,
// with the convention C(a, b) = 0 whenever b < 0, b > a, or a < 0.
// Throws for a > kMaxBinomialN.
std::int64_t binomial(int a, int b);

}  // namespace divl1
