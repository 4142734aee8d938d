#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "amls/search/oracle.hpp"
#include "amls/search/planted.hpp"
#include "amls/search/rng.hpp"
#include "amls/spec_list.hpp"

namespace amls {

/// Accumulated oracle cost sum(c^ell) plus an operation count
/// (oracle calls + drawn samples).
struct CostLedger {
    double oracle_cost = 0.0;
    long op_count = 0;
};

/// One oracle call, as exported to the query-log CSV.
struct QueryRecord {
    long k = 0;
    long t = 0;
    int ell = 0;
    int x_size = 0;
    double cost = 0.0;
};

/// Per-k choices made by the outer loop.
struct KLoopStep {
    long k = 0;
    OracleSpec spec;
    long t = 0;
    long reps = 0;       // times the sampler ran (1 family element each for det runs)
    bool truncated = false;
};

struct RunResult {
    std::uint64_t solution = 0;
    int size = 0;
    CostLedger ledger;
    std::vector<KLoopStep> k_loop_trace;
    std::vector<QueryRecord> query_log;
    bool truncated = false; // some repetition count hit the cap
};

/// Draws a uniform t-subset X, queries the oracle with budget
/// k - ceil((1-beta/alpha)k + t/alpha), and returns X together with the
/// answer. Records the query cost. Throws oracle_contract_error if the
/// result is not a member of the instance.
std::uint64_t sample_once(const PlantedInstance& inst, long k, long t,
                          const OracleSpec& spec, double beta,
                          const ExtensionOracleHandle& oracle, SplitMix64& rng,
                          CostLedger& ledger,
                          std::vector<QueryRecord>* log = nullptr);

/// Randomized search: for each k up to n/beta picks the (oracle, t) pair
/// with the cheapest cost-per-success ratio, repeats the sampler
/// 2*ceil(1/p) times (capped at rep_cap with truncation reported), and
/// returns the smallest member found. The returned set is always a member.
RunResult amls_run(const PlantedInstance& inst, const SpecList& specs,
                   const std::vector<ExtensionOracleHandle>& oracles,
                   std::uint64_t seed, long rep_cap = 1000000);

/// Derandomized search: replaces sampling by iterating over a greedy
/// set-intersection-family. All oracles must be deterministic; n <= 22.
/// The returned set has size at most beta*|OPT| with certainty.
RunResult det_amls_run(const PlantedInstance& inst, const SpecList& specs,
                       const std::vector<ExtensionOracleHandle>& oracles);

/// CSV export of the query log: header "k,t,ell,x_size,cost".
void write_query_log_csv(std::ostream& out, const std::vector<QueryRecord>& log);

} // namespace amls
