// piforge: checked 64-bit integer arithmetic.
//
// All exponent arithmetic in the library goes through these helpers. Overflow
// throws instead of wrapping: a silently corrupted kernel vector is far worse
// than a hard stop, and realistic dimensional exponents never get close.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace piforge {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

inline i64 checked_neg(i64 a) {
    return checked_sub(0, a);
}

inline i64 checked_abs(i64 a) {
    return a < 0 ? checked_neg(a) : a;
}

// Exact division; a nonzero remainder means a broken invariant upstream
// (fraction-free elimination only ever produces exact quotients).
inline i64 checked_div_exact(i64 a, i64 b) {
    if (b == 0)
        throw StructuralError("division by zero in exact division");
    if (a % b != 0)
        throw StructuralError("inexact division in fraction-free elimination");
    return a / b;
}

// gcd is always returned non-negative. gcd(0, 0) = 0.
inline i64 gcd_i64(i64 a, i64 b) {
    return std::gcd(checked_abs(a), checked_abs(b));
}

inline i64 lcm_i64(i64 a, i64 b) {
    if (a == 0 || b == 0)
        return 0;
    const i64 g = gcd_i64(a, b);
    return checked_mul(checked_abs(a) / g, checked_abs(b));
}

} // namespace piforge
