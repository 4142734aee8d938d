#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "amls/objective.hpp"
#include "amls/scalar.hpp"
#include "amls/search/rng.hpp"

using namespace amls;

namespace {

// Feasible random instances for the property checks. Interior margin keeps
// tau away from the endpoints where the derivative formulas blow up.
struct Point {
    double alpha, beta, c, kappa, tau;
};

struct PointGen {
    SplitMix64 rng;
    explicit PointGen(std::uint64_t seed) : rng(seed) {}

    double unit() { return (rng.next() >> 11) * 0x1.0p-53; }

    Point interior(double margin = 0.05) {
        const double beta = 1.05 + 1.95 * unit();
        // mix alpha below and above beta
        const double alpha = unit() < 0.5 ? 1.0 + (beta - 1.0) * unit()
                                          : beta + 3.0 * unit() + 1e-3;
        const double c = 1.0 + 9.0 * unit();
        const double kappa = (0.08 + 0.84 * unit()) / beta;
        const double lo = m_lower(alpha, beta, kappa);
        const double hi = beta * kappa;
        const double tau = lo + (margin + (1.0 - 2.0 * margin) * unit()) * (hi - lo);
        return {alpha, beta, c, kappa, tau};
    }
};

double fd_dtau(double alpha, double beta, double c, double kappa, double tau, double h) {
    return (g_value(alpha, beta, c, kappa, tau + h) -
            g_value(alpha, beta, c, kappa, tau - h)) / (2.0 * h);
}

double fd_dtau2(double alpha, double beta, double c, double kappa, double tau, double h) {
    return (g_dtau(alpha, beta, c, kappa, tau + h) -
            g_dtau(alpha, beta, c, kappa, tau - h)) / (2.0 * h);
}

// tau minimizing g(kappa, .) by bisection on the derivative sign.
double tau_min(double alpha, double beta, double c, double kappa) {
    const double lo = m_lower(alpha, beta, kappa), hi = beta * kappa;
    double a = lo + 1e-12 * (hi - lo), b = hi - 1e-12 * (hi - lo);
    if (g_dtau(alpha, beta, c, kappa, a) >= 0.0) return a;
    for (int i = 0; i < 200 && b - a > 1e-15 * (hi - lo); ++i) {
        const double mid = 0.5 * (a + b);
        (g_dtau(alpha, beta, c, kappa, mid) < 0.0 ? a : b) = mid;
    }
    return 0.5 * (a + b);
}

} // namespace

TEST_CASE("m_star piecewise values") {
    CHECK(m_star(1.0, 1.5) == 0.0);
    CHECK(m_star(2.0, 1.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m_star(8.0, 1.1) == doctest::Approx(6.9 / 7.0).epsilon(1e-15));
}

TEST_CASE("m_lower piecewise values and domain") {
    CHECK(m_lower(2.0, 1.5, 0.2) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(m_lower(1.5, 1.5, 0.3) == 0.0);
    CHECK(m_lower(1.0, 2.0, 0.25) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    // sandwiched between the discrete slope and the upper end
    for (double kappa : {0.05, 0.2, 0.45}) {
        for (double alpha : {1.0, 1.3, 2.0, 3.5}) {
            const double beta = 2.0;
            const double m = m_lower(alpha, beta, kappa);
            CHECK(m >= m_star(alpha, beta) * kappa - 1e-15);
            CHECK(m <= beta * kappa + 1e-15);
        }
    }
}

TEST_CASE("delta endpoints") {
    // numerator vanishes at tau = beta*kappa
    CHECK(delta_prob(2.0, 1.5, 0.2, 1.5 * 0.2) == doctest::Approx(0.0).epsilon(1e-15));
    // piecewise value at tau == 1 (reachable at kappa = 1/beta)
    CHECK(delta_prob(3.0, 2.0, 0.5, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    // both shapes equal kappa at the left end when alpha < beta
    CHECK(delta_prob(1.0, 2.0, 0.25, 1.0 / 3.0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(gamma_prob(1.0, 2.0, 0.25, 1.0 / 3.0) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("gamma endpoints and constant branch") {
    CHECK(gamma_prob(2.0, 1.5, 0.2, 1.5 * 0.2) == doctest::Approx(1.0 / 1.5).epsilon(1e-12));
    for (double tau : {0.0, 0.1, 0.25, 0.3})
        CHECK(gamma_prob(1.5, 1.5, 0.2, tau) == doctest::Approx(1.0 / 1.5).epsilon(1e-15));
}

TEST_CASE("delta decreasing in tau; gamma direction depends on alpha vs beta") {
    PointGen gen(11);
    for (int i = 0; i < 100; ++i) {
        const Point p = gen.interior(0.1);
        const double h = 1e-4 * (p.beta * p.kappa - m_lower(p.alpha, p.beta, p.kappa));
        CHECK(delta_prob(p.alpha, p.beta, p.kappa, p.tau + h)
              < delta_prob(p.alpha, p.beta, p.kappa, p.tau));
        const double dgamma = gamma_prob(p.alpha, p.beta, p.kappa, p.tau + h) -
                              gamma_prob(p.alpha, p.beta, p.kappa, p.tau);
        if (p.alpha > p.beta) CHECK(dgamma < 0.0);
        if (p.alpha < p.beta) CHECK(dgamma > 0.0);
    }
}

TEST_CASE("g closed-form spot values") {
    // alpha == beta at tau = 0 collapses to kappa ln c
    CHECK(g_value(1.5, 1.5, 2.0, 0.3, 0.0) ==
          doctest::Approx(0.3 * std::log(2.0)).epsilon(1e-12));
    CHECK(g_value(2.0, 1.5, 3.0, 0.0, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    // right edge equals the brute-force exponent xi for any alpha, c
    const double edge = g_value(2.0, 1.5, 3.0, 0.4, 0.6);
    CHECK(edge == doctest::Approx(xi(1.5, 0.4)).epsilon(1e-12));
    CHECK(edge == doctest::Approx(0.2911031660323688).epsilon(1e-10));
    CHECK(g_value(1.0, 2.0, 5.0, 0.3, 0.6) == doctest::Approx(xi(2.0, 0.3)).epsilon(1e-12));
}

TEST_CASE("g nonnegative on 1000 random feasible points") {
    PointGen gen(23);
    for (int i = 0; i < 1000; ++i) {
        const Point p = gen.interior(0.0);
        CHECK(g_value(p.alpha, p.beta, p.c, p.kappa, p.tau) >= -1e-12);
    }
}

TEST_CASE("g convex in tau on 200 random triples") {
    PointGen gen(37);
    for (int i = 0; i < 200; ++i) {
        const Point p = gen.interior(0.0);
        const double lo = m_lower(p.alpha, p.beta, p.kappa);
        const double hi = p.beta * p.kappa;
        const double a = lo + gen.unit() * (hi - lo);
        const double b = lo + gen.unit() * (hi - lo);
        const double left = std::min(a, b), right = std::max(a, b);
        const double mid = 0.5 * (left + right);
        const double gm = g_value(p.alpha, p.beta, p.c, p.kappa, mid);
        const double gl = g_value(p.alpha, p.beta, p.c, p.kappa, left);
        const double gr = g_value(p.alpha, p.beta, p.c, p.kappa, right);
        CHECK(gm <= 0.5 * (gl + gr) + 1e-10);
    }
}

TEST_CASE("g_dtau: finite difference, root at the alpha==beta stationary tau, sign near the right edge") {
    const double d1 = g_dtau(2.0, 1.5, 3.0, 0.3, 0.3);
    CHECK(d1 == doctest::Approx(fd_dtau(2.0, 1.5, 3.0, 0.3, 0.3, 1e-6)).epsilon(1e-6));

    // alpha == beta: the tau putting delta at the divergence root zeroes the slope
    {
        const double alpha = 2.0, c = 3.0, kappa = 0.3;
        double lo = 0.0, hi = 1.0 / alpha;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (kl_div(1.0 / alpha, mid) > std::log(c) / alpha ? lo : hi) = mid;
        }
        const double dstar = 0.5 * (lo + hi);
        const double tau_tilde = (kappa - dstar) / (1.0 / alpha - dstar);
        CHECK(std::abs(g_dtau(alpha, alpha, c, kappa, tau_tilde)) < 1e-9);
    }

    const double near_edge = 1.5 * 0.3 * (1.0 - 1e-6);
    CHECK(g_dtau(2.0, 1.5, 3.0, 0.3, near_edge) > 0.0);
}

TEST_CASE("g_dtautau positive and matching finite differences") {
    CHECK(g_dtautau(2.0, 1.5, 3.0, 0.3, 0.3) > 0.0);
    // gamma constant when alpha == beta; curvature still strictly positive
    for (double tau : {0.05, 0.2, 0.35})
        CHECK(g_dtautau(2.0, 2.0, 2.0, 0.2, tau) > 0.0);

    PointGen gen(41);
    for (int i = 0; i < 3; ++i) {
        const Point p = gen.interior(0.15);
        const double h = 1e-6 * (p.beta * p.kappa - m_lower(p.alpha, p.beta, p.kappa));
        const double fd = fd_dtau2(p.alpha, p.beta, p.c, p.kappa, p.tau, h);
        CHECK(g_dtautau(p.alpha, p.beta, p.c, p.kappa, p.tau) ==
              doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("derivative consistency at 50 random interior points") {
    PointGen gen(53);
    for (int i = 0; i < 50; ++i) {
        const Point p = gen.interior(0.2);
        const double span = p.beta * p.kappa - m_lower(p.alpha, p.beta, p.kappa);
        const double h = 1e-6 * span;
        CHECK(g_dtau(p.alpha, p.beta, p.c, p.kappa, p.tau) ==
              doctest::Approx(fd_dtau(p.alpha, p.beta, p.c, p.kappa, p.tau, h)).epsilon(1e-5));
        CHECK(g_dtautau(p.alpha, p.beta, p.c, p.kappa, p.tau) ==
              doctest::Approx(fd_dtau2(p.alpha, p.beta, p.c, p.kappa, p.tau, h)).epsilon(1e-5));
    }
}

TEST_CASE("kappa derivatives match finite differences") {
    PointGen gen(61);
    for (int i = 0; i < 20; ++i) {
        Point p = gen.interior(0.25);
        // keep kappa +- h feasible for the same tau
        if (p.alpha > p.beta) continue;
        const double h = 1e-6;
        const double fdk = (g_value(p.alpha, p.beta, p.c, p.kappa + h, p.tau) -
                            g_value(p.alpha, p.beta, p.c, p.kappa - h, p.tau)) / (2 * h);
        CHECK(g_dkappa(p.alpha, p.beta, p.c, p.kappa, p.tau) ==
              doctest::Approx(fdk).epsilon(1e-5));
        const double fdkk = (g_dkappa(p.alpha, p.beta, p.c, p.kappa + h, p.tau) -
                             g_dkappa(p.alpha, p.beta, p.c, p.kappa - h, p.tau)) / (2 * h);
        CHECK(g_dkappakappa(p.alpha, p.beta, p.c, p.kappa, p.tau) ==
              doctest::Approx(fdkk).epsilon(1e-4));
        const double fdkt = (g_dkappa(p.alpha, p.beta, p.c, p.kappa, p.tau + h) -
                             g_dkappa(p.alpha, p.beta, p.c, p.kappa, p.tau - h)) / (2 * h);
        CHECK(g_dkappatau(p.alpha, p.beta, p.c, p.kappa, p.tau) ==
              doctest::Approx(fdkt).epsilon(1e-4));
    }
}

TEST_CASE("hessian factored form agrees with the direct product") {
    // the cited cross-check point sits on the left edge where both forms vanish
    {
        const double direct = hessian_det_direct(1.0, 2.0, 4.0, 0.2, 0.25);
        const double factored = hessian_det(1.0, 2.0, 4.0, 0.2, 0.25);
        CHECK(std::abs(direct - factored) <= 1e-8 * std::max(1.0, std::abs(direct)));
    }
    PointGen gen(71);
    for (int i = 0; i < 50; ++i) {
        const Point p = gen.interior(0.1);
        if (p.alpha == p.beta) continue;
        const double direct = hessian_det_direct(p.alpha, p.beta, p.c, p.kappa, p.tau);
        const double factored = hessian_det(p.alpha, p.beta, p.c, p.kappa, p.tau);
        CHECK(std::abs(direct - factored) <= 1e-8 * std::max(1.0, std::abs(direct)));
    }
    CHECK_THROWS_AS(hessian_det(2.0, 2.0, 3.0, 0.2, 0.1), std::domain_error);
}

TEST_CASE("hessian sign factor and negativity at the inner minimizer") {
    PointGen gen(83);
    // (1 - beta/alpha)*(gamma - delta)/(gamma - 1/alpha) > 0 at interior points
    for (int i = 0; i < 40; ++i) {
        const Point p = gen.interior(0.1);
        const double gm = gamma_prob(p.alpha, p.beta, p.kappa, p.tau);
        const double dl = delta_prob(p.alpha, p.beta, p.kappa, p.tau);
        const double factor = (1.0 - p.beta / p.alpha) * (gm - dl) / (gm - 1.0 / p.alpha);
        CHECK(factor > 0.0);
    }

    // 20 random simple triples, three kappa fractions each
    SplitMix64 rng(97);
    auto unit = [&] { return (rng.next() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 20; ++i) {
        const double beta = 1.05 + 1.95 * unit();
        double alpha = unit() < 0.5 ? 1.0 + (beta - 1.0) * unit() : beta + 2.0 * unit() + 1e-3;
        const double c = 1.0 + 9.0 * unit();
        for (double frac : {0.1, 0.5, 0.9}) {
            const double kappa = frac / beta;
            const double ts = tau_min(alpha, beta, c, kappa);
            CHECK(hessian_det(alpha, beta, c, kappa, ts) < 0.0);
        }
    }

    // the cited simple case
    const double ts = tau_min(2.0, 1.5, 3.0, 0.25);
    CHECK(hessian_det(2.0, 1.5, 3.0, 0.25, ts) < 0.0);
}
