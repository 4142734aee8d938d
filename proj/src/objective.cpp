#include "amls/objective.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "amls/scalar.hpp"

namespace amls {

namespace {

void check_ratios(double alpha, double beta, const char* who) {
    if (!(alpha >= 1.0) || !(beta >= 1.0))
        throw std::domain_error(std::string(who) + ": alpha and beta must be >= 1");
}

void check_point(double alpha, double beta, double kappa, double tau, const char* who) {
    check_ratios(alpha, beta, who);
    constexpr double slack = 1e-12;
    if (!(kappa >= -slack && kappa <= 1.0 / beta + slack))
        throw std::domain_error(std::string(who) + ": kappa outside [0, 1/beta]");
    const double lo = m_lower(alpha, beta, kappa);
    const double hi = beta * kappa;
    if (!(tau >= lo - slack && tau <= hi + slack))
        throw std::domain_error(std::string(who) + ": tau outside [m_lower, beta*kappa]");
}

// 1/(tau * gamma * (1 - gamma)); the gamma-weight of the second derivatives.
double big_gamma(double alpha, double beta, double kappa, double tau) {
    const double gm = gamma_prob(alpha, beta, kappa, tau);
    return 1.0 / (tau * gm * (1.0 - gm));
}

// 1/((1-tau) * delta * (1 - delta)); the delta-weight.
double big_delta(double alpha, double beta, double kappa, double tau) {
    const double dl = delta_prob(alpha, beta, kappa, tau);
    return 1.0 / ((1.0 - tau) * dl * (1.0 - dl));
}

} // namespace

double m_star(double alpha, double beta) {
    check_ratios(alpha, beta, "m_star");
    if (alpha <= beta) return 0.0;
    return (alpha - beta) / (alpha - 1.0);
}

double m_lower(double alpha, double beta, double kappa) {
    check_ratios(alpha, beta, "m_lower");
    if (alpha == beta) return 0.0;
    if (alpha > beta) return (alpha - beta) / (alpha - 1.0) * kappa;
    if (alpha * kappa >= 1.0)
        throw std::domain_error("m_lower: alpha*kappa >= 1 in the alpha < beta branch");
    return (beta - alpha) / (1.0 - alpha * kappa) * kappa;
}

bool feasible(double alpha, double beta, const KappaTau& kt) {
    if (!(kt.kappa >= 0.0 && kt.kappa <= 1.0 / beta)) return false;
    return kt.tau >= m_lower(alpha, beta, kt.kappa) && kt.tau <= beta * kt.kappa;
}

double delta_prob(double alpha, double beta, double kappa, double tau) {
    check_point(alpha, beta, kappa, tau, "delta_prob");
    if (tau == 1.0) return 1.0 / alpha;
    return ((beta / alpha) * kappa - tau / alpha) / (1.0 - tau);
}

double gamma_prob(double alpha, double beta, double kappa, double tau) {
    check_point(alpha, beta, kappa, tau, "gamma_prob");
    if (tau == 0.0) return 1.0 / alpha;
    return (1.0 - beta / alpha) * (kappa / tau) + 1.0 / alpha;
}

double g_value(double alpha, double beta, double c, double kappa, double tau) {
    check_point(alpha, beta, kappa, tau, "g_value");
    if (!(c >= 1.0)) throw std::domain_error("g_value: c must be >= 1");
    const double gm = gamma_prob(alpha, beta, kappa, tau);
    const double dl = delta_prob(alpha, beta, kappa, tau);
    // Boundary roundoff can push gm/dl a hair outside [0,1].
    auto clamp01 = [](double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); };
    return ((beta * kappa - tau) / alpha) * std::log(c)
           - tau * entropy(clamp01(gm))
           - (1.0 - tau) * entropy(clamp01(dl))
           + entropy(clamp01(kappa));
}

double g_dtau(double alpha, double beta, double c, double kappa, double tau) {
    check_point(alpha, beta, kappa, tau, "g_dtau");
    const double gm = gamma_prob(alpha, beta, kappa, tau);
    const double dl = delta_prob(alpha, beta, kappa, tau);
    if (dl <= 0.0) return std::numeric_limits<double>::infinity(); // tau at beta*kappa
    return -std::log(c) / alpha - kl_div(1.0 / alpha, gm) + kl_div(1.0 / alpha, dl);
}

double g_dtautau(double alpha, double beta, double c, double kappa, double tau) {
    check_point(alpha, beta, kappa, tau, "g_dtautau");
    (void)c;
    const double gm = gamma_prob(alpha, beta, kappa, tau);
    const double dl = delta_prob(alpha, beta, kappa, tau);
    const double ia = 1.0 / alpha;
    return (gm - ia) * (gm - ia) * big_gamma(alpha, beta, kappa, tau)
         + (dl - ia) * (dl - ia) * big_delta(alpha, beta, kappa, tau);
}

double g_dkappa(double alpha, double beta, double c, double kappa, double tau) {
    check_point(alpha, beta, kappa, tau, "g_dkappa");
    const double gm = gamma_prob(alpha, beta, kappa, tau);
    const double dl = delta_prob(alpha, beta, kappa, tau);
    const double ia = 1.0 / alpha;
    return (beta / alpha) * std::log(c)
         + (beta - alpha) * (kl_div(ia, gm) + std::log(1.0 - gm))
         - beta * (kl_div(ia, dl) + std::log(1.0 - dl))
         + alpha * (kl_div(ia, kappa) + std::log(1.0 - kappa));
}

double g_dkappakappa(double alpha, double beta, double c, double kappa, double tau) {
    check_point(alpha, beta, kappa, tau, "g_dkappakappa");
    (void)c;
    const double r = 1.0 - beta / alpha;
    const double s = beta / alpha;
    return r * r * big_gamma(alpha, beta, kappa, tau)
         + s * s * big_delta(alpha, beta, kappa, tau)
         - 1.0 / (kappa * (1.0 - kappa));
}

double g_dkappatau(double alpha, double beta, double c, double kappa, double tau) {
    check_point(alpha, beta, kappa, tau, "g_dkappatau");
    (void)c;
    const double gm = gamma_prob(alpha, beta, kappa, tau);
    const double dl = delta_prob(alpha, beta, kappa, tau);
    const double ia = 1.0 / alpha;
    return -(1.0 - beta / alpha) * (gm - ia) * big_gamma(alpha, beta, kappa, tau)
         + (beta / alpha) * (dl - ia) * big_delta(alpha, beta, kappa, tau);
}

double hessian_det(double alpha, double beta, double c, double kappa, double tau) {
    if (alpha == beta)
        throw std::domain_error("hessian_det: the factored form excludes alpha == beta");
    check_point(alpha, beta, kappa, tau, "hessian_det");
    (void)c;
    const double gm = gamma_prob(alpha, beta, kappa, tau);
    const double dl = delta_prob(alpha, beta, kappa, tau);
    const double ia = 1.0 / alpha;
    const double a_poly = -2.0 + gm * (1.0 + alpha + beta) - alpha * beta * gm * gm;
    const double b_poly = gm * alpha * (beta - 2.0) + 1.0 + alpha - beta;
    const double weights = big_gamma(alpha, beta, kappa, tau) * big_delta(alpha, beta, kappa, tau)
                           / (alpha * alpha * (1.0 - kappa));
    const double sign_factor = (1.0 - beta / alpha) * (gm - dl) / (gm - ia);
    return weights * sign_factor * (a_poly + dl * b_poly);
}

double hessian_det_direct(double alpha, double beta, double c, double kappa, double tau) {
    const double kk = g_dkappakappa(alpha, beta, c, kappa, tau);
    const double tt = g_dtautau(alpha, beta, c, kappa, tau);
    const double kt = g_dkappatau(alpha, beta, c, kappa, tau);
    return kk * tt - kt * kt;
}

} // namespace amls
