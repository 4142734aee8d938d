#pragma once

namespace amls {

/// Binary entropy in nats, with the convention 0 ln 0 = 0 so that
/// entropy(0) == entropy(1) == 0.
double entropy(double x);

/// Kullback-Leibler divergence between Bernoulli(a) and Bernoulli(b).
/// Requires b in (0,1) unless the corresponding a-term vanishes
/// (a == 0 allows b == 0 on the first term, a == 1 allows b == 1).
double kl_div(double a, double b);

/// Base of the membership-oracle-only beta-approximation benchmark,
/// 1 + exp(-beta * entropy(1/beta)).
double brute_bound(double beta);

/// Sampling exponent of the brute-force benchmark at solution fraction
/// kappa: -beta * entropy(1/beta) * kappa + entropy(kappa).
/// Its maximum over [0, 1/beta] equals ln(brute_bound(beta)).
double xi(double beta, double kappa);

} // namespace amls
