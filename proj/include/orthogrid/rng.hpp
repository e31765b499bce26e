#pragma once

#include <cstdint>
#include <random>

namespace orthogrid {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for trial `index` of a campaign keyed by `base` and `stream`
/// (e.g. the instance size), independent of scheduling order.
constexpr std::uint64_t trial_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
    return mix64(mix64(mix64(base) ^ stream) ^ index);
}

/// 64-bit Mersenne Twister, whose output sequence is fixed by the standard,
/// with a portable mapping to doubles (std::uniform_real_distribution is
/// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = engine_();
        while (x >= limit)
            x = engine_();
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace orthogrid
