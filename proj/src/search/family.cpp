#include "amls/search/family.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "amls/hypergeom.hpp"

namespace amls {

namespace {

// All subsets of [n] with exactly w bits, in increasing mask order.
std::vector<std::uint64_t> subsets_of_weight(int n, int w) {
    std::vector<std::uint64_t> out;
    if (w == 0) {
        out.push_back(0);
        return out;
    }
    const std::uint64_t top = 1ULL << n;
    std::uint64_t v = (1ULL << w) - 1;
    while (v < top) {
        out.push_back(v);
        const std::uint64_t lo = v & (~v + 1);
        const std::uint64_t carry = v + lo;
        v = (((v ^ carry) >> 2) / lo) | carry; // Gosper's hack
    }
    return out;
}

void check_params(int n, int p, int q, int r, const char* who) {
    if (!(n >= p && p >= r && r >= 0))
        throw std::domain_error(std::string(who) + ": need n >= p >= r >= 0");
    if (!(n - p + r >= q && q >= r))
        throw std::domain_error(std::string(who) + ": need n - p + r >= q >= r");
    if (n > 22)
        throw std::domain_error(std::string(who) + ": exhaustive construction capped at n <= 22");
}

} // namespace

double family_kappa(int n, int p, int q, int r) {
    check_params(n, p, q, r, "family_kappa");
    BinomCache binom(n);
    return mpq_class(binom.at(n, q), binom.at(p, r) * binom.at(n - p, q - r)).get_d();
}

FamilyResult greedy_intersection_family(int n, int p, int q, int r) {
    check_params(n, p, q, r, "greedy_intersection_family");
    FamilyResult out;
    out.kappa = family_kappa(n, p, q, r);
    {
        BinomCache binom(n);
        double log_cnp = 0.0;
        mpz_class cnp = binom.at(n, p);
        log_cnp = std::log(cnp.get_d());
        out.greedy_bound = out.kappa * (1.0 + log_cnp);
    }

    const auto candidates = subsets_of_weight(n, q);
    if (r == 0) {
        // Any single q-set meets every target in >= 0 elements.
        out.sets.push_back(candidates.front());
        return out;
    }

    const auto targets = subsets_of_weight(n, p);
    std::vector<char> covered(targets.size(), 0);
    std::size_t remaining = targets.size();

    while (remaining > 0) {
        std::size_t best_idx = 0;
        long best_gain = -1;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            long gain = 0;
            for (std::size_t ti = 0; ti < targets.size(); ++ti) {
                if (covered[ti]) continue;
                if (std::popcount(candidates[ci] & targets[ti]) >= r) ++gain;
            }
            if (gain > best_gain) {
                best_gain = gain;
                best_idx = ci;
            }
        }
        if (best_gain <= 0)
            throw std::domain_error("greedy_intersection_family: no candidate covers the rest");
        out.sets.push_back(candidates[best_idx]);
        for (std::size_t ti = 0; ti < targets.size(); ++ti) {
            if (!covered[ti] && std::popcount(candidates[best_idx] & targets[ti]) >= r) {
                covered[ti] = 1;
                --remaining;
            }
        }
    }
    return out;
}

bool verify_intersection_family(const std::vector<std::uint64_t>& sets,
                                int n, int p, int r) {
    for (std::uint64_t target : subsets_of_weight(n, p)) {
        bool hit = false;
        for (std::uint64_t x : sets) {
            if (std::popcount(x & target) >= r) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

} // namespace amls
