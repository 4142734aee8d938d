#pragma once

#include <cstdint>
#include <vector>

namespace amls {

/// Greedy covering construction of a family of q-subsets of [n] such that
/// every p-subset meets some family member in at least r elements.
struct FamilyResult {
    std::vector<std::uint64_t> sets;
    double kappa = 0.0;        // C(n,q) / (C(p,r) * C(n-p,q-r))
    double greedy_bound = 0.0; // kappa * (1 + ln C(n,p))
};

/// Requires n >= p >= r >= 0, n - p + r >= q >= r and n <= 22 (the greedy
/// cover enumerates both subset layers exhaustively).
FamilyResult greedy_intersection_family(int n, int p, int q, int r);

/// The covering-density benchmark kappa(n,p,q,r) on its own.
double family_kappa(int n, int p, int q, int r);

/// Exhaustive validity check: every p-subset of [n] meets some family
/// member in >= r elements.
bool verify_intersection_family(const std::vector<std::uint64_t>& sets,
                                int n, int p, int r);

} // namespace amls
