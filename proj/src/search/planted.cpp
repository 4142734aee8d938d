#include "amls/search/planted.hpp"

#include <stdexcept>

#include "amls/hypergeom.hpp"
#include "amls/search/rng.hpp"

namespace amls {

PlantedInstance PlantedInstance::make(int n, std::uint64_t hidden, double beta) {
    if (n < 1 || n > 64)
        throw std::domain_error("PlantedInstance: need 1 <= n <= 64");
    if (!(beta >= 1.0))
        throw std::domain_error("PlantedInstance: beta must be >= 1");
    PlantedInstance inst;
    inst.n = n;
    inst.hidden = hidden & ((n == 64) ? ~0ULL : (1ULL << n) - 1);
    inst.k = std::popcount(inst.hidden);
    inst.beta = beta;
    inst.threshold = static_cast<int>(floor_index(beta * inst.k)) + 1;
    return inst;
}

PlantedInstance PlantedInstance::random(int n, int k, double beta, std::uint64_t seed) {
    if (k < 0 || k > n)
        throw std::domain_error("PlantedInstance: need 0 <= k <= n");
    SplitMix64 rng(seed);
    return make(n, sample_subset(rng, n, k), beta);
}

} // namespace amls
