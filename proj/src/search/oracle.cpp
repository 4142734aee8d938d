#include "amls/search/oracle.hpp"

#include <bit>

#include "amls/search/rng.hpp"

namespace amls {

std::uint64_t threshold_padding(const PlantedInstance& inst, std::uint64_t x) {
    int need = inst.threshold - std::popcount(x);
    std::uint64_t avail = inst.universe_mask() & ~x;
    std::uint64_t pad = 0;
    while (need > 0 && avail != 0) {
        const std::uint64_t bit = avail & (~avail + 1);
        pad |= bit;
        avail ^= bit;
        --need;
    }
    return pad;
}

ExtensionOracleHandle make_planted_oracle(const PlantedInstance& inst,
                                          const OracleSpec& spec,
                                          bool adversarial) {
    ExtensionOracleHandle h;
    h.spec = spec;
    h.deterministic = true;
    const double alpha = spec.alpha;
    if (!adversarial) {
        h.answer = [inst](const ExtensionQuery& q) -> std::uint64_t {
            const std::uint64_t rem = inst.hidden & ~q.subset;
            if (std::popcount(rem) <= q.budget) return rem;
            return threshold_padding(inst, q.subset);
        };
    } else {
        h.answer = [inst, alpha](const ExtensionQuery& q) -> std::uint64_t {
            // Reveal the hidden set only on covering queries, i.e. when the
            // padding answer could not stand in for it.
            const bool covering =
                std::popcount(q.subset) + alpha * q.budget + 1e-9 < inst.threshold;
            const std::uint64_t rem = inst.hidden & ~q.subset;
            if (covering && std::popcount(rem) <= q.budget) return rem;
            return threshold_padding(inst, q.subset);
        };
    }
    return h;
}

ExtensionOracleHandle make_half_reliable_oracle(const PlantedInstance& inst,
                                                ExtensionOracleHandle inner) {
    ExtensionOracleHandle h;
    h.spec = inner.spec;
    h.deterministic = false;
    h.answer = [inst, inner = std::move(inner)](const ExtensionQuery& q) -> std::uint64_t {
        if (std::popcount(q.randomness) & 1) return threshold_padding(inst, q.subset);
        return inner.answer(q);
    };
    return h;
}

OracleAudit audit_oracle(const PlantedInstance& inst,
                         const ExtensionOracleHandle& handle,
                         long queries, std::uint64_t seed) {
    OracleAudit audit;
    SplitMix64 rng(seed);
    for (long i = 0; i < queries; ++i) {
        ExtensionQuery q;
        const int xsize = static_cast<int>(rng.below(inst.n + 1));
        q.subset = sample_subset(rng, inst.n, xsize);
        q.budget = static_cast<int>(rng.below(inst.n + 1));
        q.randomness = rng.next();
        const std::uint64_t y = handle.answer(q);
        ++audit.queries;
        if (!inst.member(q.subset | y)) ++audit.membership_violations;
        if (inst.has_extension(q.subset, q.budget)) {
            ++audit.p2_eligible;
            if (std::popcount(y) <= handle.spec.alpha * q.budget + 1e-9)
                ++audit.p2_successes;
        }
    }
    return audit;
}

} // namespace amls
