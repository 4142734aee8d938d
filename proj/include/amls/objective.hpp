#pragma once

namespace amls {

/// Slope of the lower end of the discrete sample-size range: 0 for
/// alpha <= beta, (alpha-beta)/(alpha-1) for alpha > beta.
double m_star(double alpha, double beta);

/// Lower end of the feasible tau interval for a given kappa in [0, 1/beta].
/// Piecewise: (beta-alpha)/(1-alpha*kappa)*kappa if alpha < beta, 0 if
/// alpha == beta, m_star(alpha,beta)*kappa if alpha > beta.
double m_lower(double alpha, double beta, double kappa);

/// Feasible point of the continuous objective: kappa in [0, 1/beta] and
/// tau in [m_lower(kappa), beta*kappa].
struct KappaTau {
    double kappa = 0.0;
    double tau = 0.0;
};

/// True when kt lies in the feasible region for (alpha, beta).
bool feasible(double alpha, double beta, const KappaTau& kt);

/// Auxiliary probability delta(kappa, tau) = (beta*kappa - tau) / (alpha*(1-tau)),
/// extended to 1/alpha at tau == 1. Lies in [0, 1/alpha) on the feasible
/// range and is strictly decreasing in tau.
double delta_prob(double alpha, double beta, double kappa, double tau);

/// Auxiliary probability gamma(kappa, tau) = (1-beta/alpha)*kappa/tau + 1/alpha,
/// extended to 1/alpha at tau == 0.
double gamma_prob(double alpha, double beta, double kappa, double tau);

/// The continuous sampling-cost exponent
///   g(kappa, tau) = ((beta*kappa - tau)/alpha) ln c
///                   - tau*H(gamma) - (1-tau)*H(delta) + H(kappa).
/// Non-negative on the feasible region. Throws std::domain_error outside it.
double g_value(double alpha, double beta, double c, double kappa, double tau);

/// First partial derivative of g in tau:
///   -ln(c)/alpha - D(1/alpha || gamma) + D(1/alpha || delta).
/// Diverges to +inf as tau -> beta*kappa; requires tau strictly inside
/// (m_lower(kappa), beta*kappa).
double g_dtau(double alpha, double beta, double c, double kappa, double tau);

/// Second partial derivative in tau; strictly positive on the open interval.
double g_dtautau(double alpha, double beta, double c, double kappa, double tau);

/// First partial derivative in kappa.
double g_dkappa(double alpha, double beta, double c, double kappa, double tau);

/// Second partial derivative in kappa.
double g_dkappakappa(double alpha, double beta, double c, double kappa, double tau);

/// Mixed second partial derivative.
double g_dkappatau(double alpha, double beta, double c, double kappa, double tau);

/// Determinant of the Hessian of g at (kappa, tau) via the factored form.
/// Requires alpha != beta, kappa in (0, 1/beta), tau in [m_lower, beta*kappa)
/// away from the gamma/delta degeneracies. Negative at (kappa, tau*(kappa)).
double hessian_det(double alpha, double beta, double c, double kappa, double tau);

/// Same determinant assembled directly from the four second partials;
/// used as the independent route for cross-checking hessian_det.
double hessian_det_direct(double alpha, double beta, double c, double kappa, double tau);

} // namespace amls
