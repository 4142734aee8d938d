#pragma once

#include <vector>

#include "amls/hypergeom.hpp"
#include "amls/spec_list.hpp"

namespace amls {

/// Exact discrete max-min sampling cost
///   f(n) = max_{k in [0, n/beta]} min_{(alpha,c)} min_{t in [m_star*k, beta*k]}
///          c^{(beta*k - t)/alpha} / p(n, k, t, (1-beta/alpha)k + t/alpha)
/// reported in log space together with the per-k witnesses.
struct FEval {
    struct PerK {
        long k = 0;
        OracleSpec spec;   // oracle attaining the inner min for this k
        long t = 0;        // sample size attaining it (ties toward smaller t)
        double log_term = 0.0;
    };
    long n = 0;
    double log_value = 0.0;
    std::vector<PerK> per_k;
    long argmax_k = 0;
};

/// Evaluates f. Exact mode computes the tail probabilities as rationals and
/// requires n <= 60; log mode uses log-gamma. Ties in k go to the smaller k.
FEval f_value(const SpecList& specs, double beta, long n,
              TailValue::Mode mode = TailValue::Mode::log_float);

/// n-th root of f as an exponent-base estimate: exp(log_value / n).
double base_estimate(const FEval& f);

} // namespace amls
