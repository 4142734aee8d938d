#include "amls/search/rng.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace amls {

std::uint64_t sample_subset(SplitMix64& rng, int n, int t) {
    if (n < 0 || n > 64 || t < 0 || t > n)
        throw std::domain_error("sample_subset: need 0 <= t <= n <= 64");
    std::array<std::uint8_t, 64> idx{};
    std::iota(idx.begin(), idx.begin() + n, 0);
    std::uint64_t mask = 0;
    for (int i = 0; i < t; ++i) {
        const int j = i + static_cast<int>(rng.below(n - i));
        std::swap(idx[i], idx[j]);
        mask |= 1ULL << idx[i];
    }
    return mask;
}

} // namespace amls
