#include "amls/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace amls {

double entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("entropy: argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

double kl_div(double a, double b) {
    if (!(a >= 0.0 && a <= 1.0))
        throw std::domain_error("kl_div: first argument outside [0,1]");
    if (!(b >= 0.0 && b <= 1.0))
        throw std::domain_error("kl_div: second argument outside [0,1]");
    double v = 0.0;
    if (a > 0.0) {
        if (b == 0.0) throw std::domain_error("kl_div: b == 0 with a > 0");
        v += a * std::log(a / b);
    }
    if (a < 1.0) {
        if (b == 1.0) throw std::domain_error("kl_div: b == 1 with a < 1");
        v += (1.0 - a) * std::log((1.0 - a) / (1.0 - b));
    }
    return v;
}

double brute_bound(double beta) {
    if (!(beta >= 1.0)) throw std::domain_error("brute_bound: beta must be >= 1");
    return 1.0 + std::exp(-beta * entropy(1.0 / beta));
}

double xi(double beta, double kappa) {
    if (!(beta >= 1.0)) throw std::domain_error("xi: beta must be >= 1");
    if (!(kappa >= 0.0 && kappa <= 1.0 / beta + 1e-15))
        throw std::domain_error("xi: kappa outside [0, 1/beta]");
    return -beta * entropy(1.0 / beta) * kappa + entropy(std::min(kappa, 1.0));
}

} // namespace amls
