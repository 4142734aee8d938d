#include "amls/gstar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "amls/errors.hpp"
#include "amls/objective.hpp"
#include "amls/scalar.hpp"

namespace amls {

namespace {

// Unique root of kl_div(1/alpha, x) == ln(c)/alpha with x in (0, 1/alpha);
// the divergence is strictly decreasing on that interval.
double delta_star_root(double alpha, double c) {
    const double target = std::log(c) / alpha;
    double lo = 0.0, hi = 1.0 / alpha;
    for (int i = 0; i < 200 && hi - lo > 1e-17; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (kl_div(1.0 / alpha, mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

GStarEval g_star(double alpha, double beta, double c, double kappa,
                 double tol, int max_iter) {
    if (!(alpha >= 1.0) || !(beta >= 1.0) || !(c >= 1.0))
        throw std::domain_error("g_star: alpha, beta, c must be >= 1");
    if (!(tol > 0.0)) throw std::domain_error("g_star: tol must be positive");
    const double lim = 1.0 / beta;
    if (!(kappa >= -1e-15 && kappa <= lim + 1e-15))
        throw std::domain_error("g_star: kappa outside [0, 1/beta]");

    GStarEval out;
    // Both kappa endpoints give value 0 exactly; evaluated by closed form,
    // never by the generic formula, because the bracket degenerates there.
    if (kappa <= 0.0 || kappa >= lim) {
        out.value = 0.0;
        out.tau_star = 0.0;
        out.case_tag = GStarCase::boundary_zero;
        return out;
    }

    if (alpha == beta) {
        out.case_tag = GStarCase::closed_form_alpha_eq_beta;
        if (c == 1.0) {
            out.value = 0.0;
            out.tau_star = 0.0;
            return out;
        }
        const double dstar = delta_star_root(alpha, c);
        out.value = kappa * std::log(c);
        if (kappa >= dstar) out.value -= kl_div(kappa, dstar);
        out.value = std::max(out.value, 0.0);
        // Stationary tau of the closed-form family; clamped to the feasible range.
        out.tau_star = std::clamp((kappa - dstar) / (1.0 / alpha - dstar), 0.0, beta * kappa);
        return out;
    }

    if (c == 1.0 && alpha < beta) {
        out.value = 0.0;
        out.tau_star = m_lower(alpha, beta, kappa);
        out.case_tag = GStarCase::corner_c1_alpha_lt_beta;
        return out;
    }

    // Simple case: the minimizer is strictly interior on the right, and the
    // derivative is -inf (alpha > beta) or -ln(c)/alpha (alpha < beta) on the
    // left, +inf on the right. Bisect the monotone derivative.
    const double lo = m_lower(alpha, beta, kappa);
    const double hi = beta * kappa;
    const double eb = 1e-12 * (hi - lo);
    double a = lo + eb, b = hi - eb;

    if (g_dtau(alpha, beta, c, kappa, a) >= 0.0) {
        out.value = std::max(g_value(alpha, beta, c, kappa, a), 0.0);
        out.tau_star = a;
        out.case_tag = GStarCase::boundary_m;
        out.bracket_width = 0.0;
        return out;
    }

    const double width_goal = std::max(1e-15 * (hi - lo), 1e-300);
    int it = 0;
    for (; it < max_iter && b - a > width_goal; ++it) {
        const double mid = 0.5 * (a + b);
        if (g_dtau(alpha, beta, c, kappa, mid) < 0.0)
            a = mid;
        else
            b = mid;
    }
    const double tau = 0.5 * (a + b);
    out.value = std::max(g_value(alpha, beta, c, kappa, tau), 0.0);
    out.tau_star = tau;
    out.case_tag = GStarCase::interior_root;
    out.bracket_width = b - a;

    // The value error of convex bisection is ~ g'' * width^2; check it
    // against the requested tolerance instead of trusting the loop count.
    const double curv = g_dtautau(alpha, beta, c, kappa, tau);
    if (curv * (b - a) * (b - a) > tol && it >= max_iter) {
        std::ostringstream msg;
        msg << "g_star: no convergence after " << max_iter << " iterations"
            << " (alpha=" << alpha << " beta=" << beta << " c=" << c
            << " kappa=" << kappa << " bracket=" << (b - a) << ")";
        throw tolerance_error(msg.str());
    }
    return out;
}

double x_of_tau(double alpha, double beta, double kappa, double tau) {
    return (1.0 - beta / alpha) * kappa + tau / alpha;
}

double g_tilde(double c, double kappa, double tau, double y) {
    const double t1 = tau > 0.0 ? tau * entropy(std::clamp(y / tau, 0.0, 1.0)) : 0.0;
    const double t2 = tau < 1.0
        ? (1.0 - tau) * entropy(std::clamp((kappa - y) / (1.0 - tau), 0.0, 1.0))
        : 0.0;
    return (kappa - y) * std::log(c) - t1 - t2 + entropy(kappa);
}

GStarAltEval g_star_alt(double alpha, double beta, double c, double kappa,
                        double grid_step) {
    if (!(alpha >= 1.0 && alpha <= beta))
        throw std::domain_error("g_star_alt: requires 1 <= alpha <= beta");
    if (!(c > 1.0)) throw std::domain_error("g_star_alt: requires c > 1");
    if (!(kappa > 0.0 && kappa < 1.0 / beta))
        throw std::domain_error("g_star_alt: kappa outside (0, 1/beta)");
    if (!(grid_step > 0.0)) throw std::domain_error("g_star_alt: grid_step must be positive");

    GStarAltEval best;
    bool have = false;
    const double tau_hi = beta * kappa;
    const long nt = static_cast<long>(tau_hi / grid_step) + 1;
    for (long i = 0; i <= nt; ++i) {
        const double tau = std::min(tau_hi, i * grid_step);
        const double ylo = std::max(0.0, x_of_tau(alpha, beta, kappa, tau));
        const double yhi = std::min(kappa, tau);
        if (ylo > yhi) continue;
        const long ny = static_cast<long>((yhi - ylo) / grid_step) + 1;
        for (long j = 0; j <= ny; ++j) {
            const double y = std::min(yhi, ylo + j * grid_step);
            const double v = g_tilde(c, kappa, tau, y);
            if (!have || v < best.value) {
                best = {v, tau, y};
                have = true;
            }
        }
    }
    if (!have) throw std::domain_error("g_star_alt: empty feasible grid");
    return best;
}

} // namespace amls
