#pragma once

#include <cstdint>
#include <functional>

#include "amls/search/planted.hpp"
#include "amls/spec_list.hpp"

namespace amls {

/// One extension-oracle call: a base set, an extension budget, and the
/// randomness string the caller supplies.
struct ExtensionQuery {
    std::uint64_t subset = 0;
    int budget = 0;
    std::uint64_t randomness = 0;
};

/// A callable extension oracle together with its advertised spec.
/// Contract: answer(q) | q.subset is always a member of the set system;
/// whenever q.subset has a budget-sized extension, the answer has size at
/// most alpha*budget — with certainty if deterministic, else for at least
/// half of the randomness strings.
struct ExtensionOracleHandle {
    OracleSpec spec;
    bool deterministic = true;
    std::function<std::uint64_t(const ExtensionQuery&)> answer;
};

/// Deterministic padding set: the lowest-index elements outside X, as many
/// as needed to reach the instance threshold (clamped by availability).
std::uint64_t threshold_padding(const PlantedInstance& inst, std::uint64_t x);

/// Builds an oracle for a planted instance.
/// Honest: returns R \ X whenever that fits the budget, else pads to the
/// threshold — a valid deterministic alpha-extension oracle for every
/// alpha >= 1. Adversarial: reveals R \ X only when the query is cheap
/// enough that padding would betray the instance (the covering queries),
/// else pads; this is the worst legal oracle for the spec's alpha.
ExtensionOracleHandle make_planted_oracle(const PlantedInstance& inst,
                                          const OracleSpec& spec,
                                          bool adversarial = false);

/// Wraps a deterministic handle into the weakest legal randomized oracle:
/// it honors the size guarantee only on even-parity randomness strings
/// (exactly half of them) and pads otherwise.
ExtensionOracleHandle make_half_reliable_oracle(const PlantedInstance& inst,
                                                ExtensionOracleHandle inner);

/// Random-query audit of the oracle contract.
struct OracleAudit {
    long queries = 0;
    long membership_violations = 0; // property 1 failures
    long p2_eligible = 0;           // queries where an extension existed
    long p2_successes = 0;          // ... and the answer met the size bound
};
OracleAudit audit_oracle(const PlantedInstance& inst,
                         const ExtensionOracleHandle& handle,
                         long queries, std::uint64_t seed);

} // namespace amls
