#include "amls/bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "amls/gstar.hpp"
#include "amls/scalar.hpp"

namespace amls {

namespace {

// Abscissa floor of the outer search; values of kappa below it are
// indistinguishable from the endpoint at double precision anyway.
constexpr double kKappaFloor = 1e-12;

double inner_min(const SpecList& specs, double beta, double kappa, double gtol) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : specs)
        best = std::min(best, g_star(s.alpha, beta, s.c, kappa, gtol).value);
    return best;
}

} // namespace

BoundResult amlsbound(const SpecList& specs, double beta, double eps) {
    if (!(beta >= 1.0)) throw std::domain_error("amlsbound: beta must be >= 1");
    if (!(eps > 0.0)) throw std::domain_error("amlsbound: eps must be positive");

    // Inner tolerance tightened to eps/4 in log-domain: |d' - d| <= d*|v' - v|
    // up to second order and d <= 2.
    const double gtol = eps / 4.0;
    const auto h = [&](double kappa) { return inner_min(specs, beta, kappa, gtol); };

    double lo = 0.0, hi = 1.0 / beta;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = h(x1), f2 = h(x2);
    int it = 0;
    // h is concave (min of concave functions), so golden-section is exact up
    // to the abscissa tolerance. Ties go toward smaller kappa.
    while (hi - lo > kKappaFloor && it < 400) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1; f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = h(x1);
        } else {
            lo = x1;
            x1 = x2; f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = h(x2);
        }
        ++it;
    }

    BoundResult out;
    out.kappa_star = f1 >= f2 ? x1 : x2;
    out.ln_d = std::max(f1, f2);
    out.d = std::exp(out.ln_d);
    out.eps = eps;
    out.iterations = it;
    for (const auto& s : specs) {
        if (g_star(s.alpha, beta, s.c, out.kappa_star, gtol).value <= out.ln_d + 10.0 * eps)
            out.active_specs.push_back(s);
    }
    return out;
}

double esaamlsbound(double beta, double c) {
    if (!(beta > 1.0) || !(c > 1.0))
        throw std::domain_error("esaamlsbound: requires beta > 1 and c > 1");
    // kl_div(1/beta, (d-1)/(c-1)) is strictly decreasing in d while
    // (d-1)/(c-1) stays below 1/beta, so plain bisection applies.
    const double target = std::log(c) / beta;
    double lo = 1.0 + 1e-15;
    double hi = 1.0 + (c - 1.0) / beta * (1.0 - 1e-15);
    for (int i = 0; i < 200 && hi - lo > 1e-10 * 0.5; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (kl_div(1.0 / beta, (mid - 1.0) / (c - 1.0)) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace amls
