#pragma once

namespace amls {

/// How the inner tau-minimization was resolved.
enum class GStarCase {
    interior_root,           // bisection found the stationary tau
    boundary_m,              // derivative already nonnegative at the left end
    boundary_zero,           // kappa at 0 or 1/beta, value 0 by closed form
    closed_form_alpha_eq_beta,
    corner_c1_alpha_lt_beta, // c == 1, alpha < beta: identically 0
};

/// Result of minimizing g(kappa, .) over [m_lower(kappa), beta*kappa].
struct GStarEval {
    double value = 0.0;      // min of g, always >= 0
    double tau_star = 0.0;   // strictly below beta*kappa
    GStarCase case_tag = GStarCase::boundary_zero;
    double bracket_width = 0.0;
};

/// Computes g*(kappa) = min over tau of g(kappa, tau) to additive
/// precision tol. Dispatches the closed-form corners (kappa endpoints,
/// alpha == beta, c == 1 with alpha < beta) before the generic bisection
/// on g_dtau. Throws tolerance_error after max_iter bisection steps.
GStarEval g_star(double alpha, double beta, double c, double kappa,
                 double tol = 1e-12, int max_iter = 200);

/// Slow independent evaluation of g*(kappa) for 1 <= alpha <= beta, c > 1:
/// grid minimization of the two-variable relaxation
///   gt(tau, y) = (kappa-y) ln c - tau H(y/tau) - (1-tau) H((kappa-y)/(1-tau)) + H(kappa)
/// over its feasible (tau, y) region. Agrees with g_star to within
/// 3*grid_step in value.
struct GStarAltEval {
    double value = 0.0;
    double tau_arg = 0.0;
    double y_arg = 0.0;
};
GStarAltEval g_star_alt(double alpha, double beta, double c, double kappa,
                        double grid_step);

/// The relaxed objective itself (used by tests to probe the interior line).
double g_tilde(double c, double kappa, double tau, double y);

/// y-coordinate at which the relaxation reproduces g: (1-beta/alpha)*kappa + tau/alpha.
double x_of_tau(double alpha, double beta, double kappa, double tau);

} // namespace amls
