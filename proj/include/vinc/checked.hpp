#pragma once

#include <cstdint>
#include <stdexcept>

namespace vinc {

// Exact 64-bit arithmetic; overflow is detected and thrown, never wrapped.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Invariants that valid inputs cannot violate; a throw here means a bug in
// this library, not in the caller's data.
inline void internal_check(bool cond, const char* what) {
    if (!cond)
        throw std::logic_error(what);
}

} // namespace vinc
