#include "amls/search/run.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "amls/errors.hpp"
#include "amls/hypergeom.hpp"
#include "amls/objective.hpp"
#include "amls/search/family.hpp"

namespace amls {

namespace {

struct KChoice {
    OracleSpec spec;
    std::size_t spec_idx = 0;
    long t = 0;
    double log_p = 0.0; // log of the success probability at the chosen t
};

// Line-3 selection of Algorithm 2: the (oracle, t) pair minimizing
// c^{(beta k - t)/alpha} / p(n, k, t, x(k,t)); ties toward smaller t,
// specs scanned in list order.
KChoice choose_for_k(const LogBinomCache& binom, const SpecList& specs,
                     double beta, long n, long k) {
    KChoice best;
    double best_val = std::numeric_limits<double>::infinity();
    for (std::size_t si = 0; si < specs.size(); ++si) {
        const OracleSpec& s = specs[si];
        const long t_lo = std::max<long>(0, ceil_index(m_star(s.alpha, beta) * k));
        const long t_hi = floor_index(beta * k);
        for (long t = t_lo; t <= t_hi; ++t) {
            const double x = (1.0 - beta / s.alpha) * k + static_cast<double>(t) / s.alpha;
            const double lp = hypergeom_tail_log(binom, n, k, t, x);
            if (lp == -std::numeric_limits<double>::infinity()) continue;
            const double v = ((beta * k - t) / s.alpha) * std::log(s.c) - lp;
            if (v < best_val) {
                best_val = v;
                best = {s, si, t, lp};
            }
        }
    }
    if (best_val == std::numeric_limits<double>::infinity())
        throw std::domain_error("amls_run: no feasible (spec, t) for some k");
    return best;
}

long repetitions(double log_p, long cap, bool* truncated) {
    // 2 * ceil(1/p), capped.
    const double log_cap = std::log(static_cast<double>(cap));
    if (-log_p >= log_cap) {
        *truncated = true;
        return cap;
    }
    const double inv = std::exp(-log_p);
    long reps = 2 * static_cast<long>(std::ceil(inv - 1e-9));
    if (reps < 2) reps = 2;
    if (reps > cap) {
        *truncated = true;
        reps = cap;
    }
    return reps;
}

void take_if_smaller(RunResult& out, std::uint64_t z) {
    const int size = std::popcount(z);
    if (out.size < 0 || size < out.size) {
        out.size = size;
        out.solution = z;
    }
}

} // namespace

std::uint64_t sample_once(const PlantedInstance& inst, long k, long t,
                          const OracleSpec& spec, double beta,
                          const ExtensionOracleHandle& oracle, SplitMix64& rng,
                          CostLedger& ledger, std::vector<QueryRecord>* log) {
    if (t < 0 || t > inst.n || k < 0)
        throw std::domain_error("sample_once: need 0 <= t <= n and k >= 0");
    const std::uint64_t x_set = sample_subset(rng, inst.n, static_cast<int>(t));
    const double x = (1.0 - beta / spec.alpha) * k + static_cast<double>(t) / spec.alpha;
    int ell = static_cast<int>(k - ceil_index(x));
    if (ell < 0) ell = 0;

    ExtensionQuery q{x_set, ell, rng.next()};
    const std::uint64_t y = oracle.answer(q);
    const std::uint64_t z = x_set | y;
    const double cost = std::pow(spec.c, ell);
    ledger.oracle_cost += cost;
    ledger.op_count += 2; // one sample drawn, one oracle call
    if (log) log->push_back({k, t, ell, std::popcount(x_set), cost});
    if (!inst.member(z)) {
        std::ostringstream msg;
        msg << "oracle returned a non-member for query (|X|=" << std::popcount(x_set)
            << ", ell=" << ell << ")";
        throw oracle_contract_error(msg.str());
    }
    return z;
}

RunResult amls_run(const PlantedInstance& inst, const SpecList& specs,
                   const std::vector<ExtensionOracleHandle>& oracles,
                   std::uint64_t seed, long rep_cap) {
    if (oracles.size() != specs.size())
        throw std::invalid_argument("amls_run: one oracle handle per spec required");
    RunResult out;
    out.size = -1;
    SplitMix64 rng(seed);
    LogBinomCache binom(inst.n);
    const long k_hi = floor_index(static_cast<double>(inst.n) / inst.beta);
    for (long k = 0; k <= k_hi; ++k) {
        const KChoice choice = choose_for_k(binom, specs, inst.beta, inst.n, k);
        bool truncated = false;
        const long reps = repetitions(choice.log_p, rep_cap, &truncated);
        out.truncated |= truncated;
        for (long r = 0; r < reps; ++r) {
            const std::uint64_t z =
                sample_once(inst, k, choice.t, choice.spec, inst.beta,
                            oracles[choice.spec_idx], rng, out.ledger, &out.query_log);
            take_if_smaller(out, z);
        }
        out.k_loop_trace.push_back({k, choice.spec, choice.t, reps, truncated});
    }
    return out;
}

RunResult det_amls_run(const PlantedInstance& inst, const SpecList& specs,
                       const std::vector<ExtensionOracleHandle>& oracles) {
    if (oracles.size() != specs.size())
        throw std::invalid_argument("det_amls_run: one oracle handle per spec required");
    for (const auto& h : oracles)
        if (!h.deterministic)
            throw std::invalid_argument("det_amls_run: all oracles must be deterministic");
    if (inst.n > 22)
        throw std::domain_error("det_amls_run: family construction capped at n <= 22");

    RunResult out;
    out.size = -1;
    LogBinomCache binom(inst.n);
    const long k_hi = floor_index(static_cast<double>(inst.n) / inst.beta);
    for (long k = 0; k <= k_hi; ++k) {
        const KChoice choice = choose_for_k(binom, specs, inst.beta, inst.n, k);
        const double x =
            (1.0 - inst.beta / choice.spec.alpha) * k + static_cast<double>(choice.t) / choice.spec.alpha;
        const long x_ceil = std::max<long>(0, ceil_index(x));
        int ell = static_cast<int>(k - ceil_index(x));
        if (ell < 0) ell = 0;

        // The y in [ceil(x), min(t,k)] minimizing the covering density
        // kappa(n,k,t,y), i.e. maximizing C(k,y)*C(n-k,t-y).
        long best_y = x_ceil;
        double best_log = -std::numeric_limits<double>::infinity();
        for (long y = x_ceil; y <= std::min(choice.t, k); ++y) {
            const double lg = binom.log_binom(k, y) + binom.log_binom(inst.n - k, choice.t - y);
            if (lg > best_log) {
                best_log = lg;
                best_y = y;
            }
        }

        const FamilyResult family = greedy_intersection_family(
            inst.n, static_cast<int>(k), static_cast<int>(choice.t), static_cast<int>(best_y));
        for (const std::uint64_t x_set : family.sets) {
            ExtensionQuery q{x_set, ell, 0};
            const std::uint64_t y = oracles[choice.spec_idx].answer(q);
            const std::uint64_t z = x_set | y;
            const double cost = std::pow(choice.spec.c, ell);
            out.ledger.oracle_cost += cost;
            out.ledger.op_count += 2;
            out.query_log.push_back({k, choice.t, ell, std::popcount(x_set), cost});
            if (!inst.member(z))
                throw oracle_contract_error("det_amls_run: oracle returned a non-member");
            take_if_smaller(out, z);
        }
        out.k_loop_trace.push_back({k, choice.spec, choice.t,
                                    static_cast<long>(family.sets.size()), false});
    }
    return out;
}

void write_query_log_csv(std::ostream& out, const std::vector<QueryRecord>& log) {
    out << "k,t,ell,x_size,cost\n";
    char buf[160];
    for (const auto& rec : log) {
        std::snprintf(buf, sizeof(buf), "%ld,%ld,%d,%d,%.17g\n",
                      rec.k, rec.t, rec.ell, rec.x_size, rec.cost);
        out << buf;
    }
}

} // namespace amls
