#pragma once

#include <vector>

#include "amls/spec_list.hpp"

namespace amls {

/// Output of the two-level optimization behind amlsbound.
struct BoundResult {
    double d = 1.0;                       // exponent base, in [1, 2]
    double ln_d = 0.0;                    // d == exp(ln_d)
    double kappa_star = 0.0;              // outer maximizer
    std::vector<OracleSpec> active_specs; // specs attaining the inner min at kappa_star
    double eps = 0.0;                     // requested additive precision on d
    int iterations = 0;                   // outer golden-section iterations
};

/// Optimal exponent base for the oracle list at ratio beta:
///   d = exp( max_{kappa in [0,1/beta]} min_{(alpha,c)} g*(kappa) )
/// with additive error at most eps on d. The outer search is golden-section
/// on the concave inner minimum; ties break toward smaller kappa.
BoundResult amlsbound(const SpecList& specs, double beta, double eps = 1e-6);

/// Prior-work base for the alpha == beta setting: the unique
/// d in (1, 1+(c-1)/beta) with kl_div(1/beta, (d-1)/(c-1)) == ln(c)/beta.
/// Computed by bisection to additive precision 1e-10; requires beta, c > 1.
double esaamlsbound(double beta, double c);

} // namespace amls
