#pragma once

#include <cstdint>
#include <stdexcept>

namespace extremal {

// All clique/copy counters promise exact 64-bit results: overflow is a
// reported error, never wraparound.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("count exceeds 64 bits");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("count exceeds 64 bits");
    return r;
}

// C(n, k), exact, throws on 64-bit overflow.
inline std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;  // integral at every step
        if (c > ~std::uint64_t(0))
            throw std::overflow_error("binomial exceeds 64 bits");
    }
    return std::uint64_t(c);
}

}  // namespace extremal
