#pragma once

#include <cstdint>

namespace amls {

/// Counter-based 64-bit generator (splitmix64). Deterministic across
/// platforms given the seed; one instance per run, never shared.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Unbiased uniform draw from [0, n).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t lim = ~0ULL - ~0ULL % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= lim);
        return x % n;
    }

private:
    std::uint64_t state_;
};

/// Uniform random t-subset of an n-element universe as a bitmask (n <= 64),
/// drawn by partial Fisher-Yates.
std::uint64_t sample_subset(SplitMix64& rng, int n, int t);

} // namespace amls
