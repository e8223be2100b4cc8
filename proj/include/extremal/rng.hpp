#pragma once

#include <cstdint>

namespace extremal {

// SplitMix64 (Steele/Lea/Flood). Chosen as the toolkit-wide generator
// because the whole algorithm fits in four lines, is seedable and produces
// the same stream on every platform. All randomized operations take an
// explicit seed and derive their stream from it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, bound) via rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int below_int(int bound) { return int(below(std::uint64_t(bound))); }

    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t s_;
};

// Independent substream for a parallel/sequence index: trials are
// reproducible regardless of evaluation order.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0xA0761D6478BD642Full + index));
    mix.next();
    return mix;
}

}  // namespace extremal
