#pragma once

#include <bit>
#include <cstdint>

namespace amls {

/// Monotone set system with a hidden optimum R of size k:
///   S is a member iff R is contained in S or |S| >= floor(beta*k) + 1.
/// The minimum-cardinality member is R itself.
struct PlantedInstance {
    int n = 0;
    std::uint64_t hidden = 0; // the planted optimum R
    int k = 0;                // |R|
    double beta = 1.0;
    int threshold = 1;        // floor(beta*k) + 1

    static PlantedInstance make(int n, std::uint64_t hidden, double beta);

    /// Hidden optimum chosen uniformly among k-subsets from the seed.
    static PlantedInstance random(int n, int k, double beta, std::uint64_t seed);

    bool member(std::uint64_t s) const {
        return (s & hidden) == hidden || std::popcount(s) >= threshold;
    }

    /// True when X can reach a member by adding at most ell elements.
    bool has_extension(std::uint64_t x, int ell) const {
        const int missing = std::popcount(hidden & ~x);
        const int to_threshold = threshold - std::popcount(x);
        return missing <= ell || to_threshold <= ell;
    }

    std::uint64_t universe_mask() const {
        return n == 64 ? ~0ULL : (1ULL << n) - 1;
    }
};

} // namespace amls
