#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace amls {

/// Fixed-point decimal rendering, locale-independent ('.' separator).
inline std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

/// Decimal count implied by an additive precision: ceil(-log10(eps)).
inline int decimals_for_eps(double eps) {
    const int d = static_cast<int>(std::ceil(-std::log10(eps) - 1e-9));
    return d < 0 ? 0 : d;
}

} // namespace amls
