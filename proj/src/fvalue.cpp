#include "amls/fvalue.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "amls/objective.hpp"

namespace amls {

namespace {

// Inner minimization for one k: best (spec, t) pair with ties toward the
// smaller t, specs scanned in list order.
template <typename TailLog>
FEval::PerK best_term_for_k(const SpecList& specs, double beta, long n, long k,
                            TailLog&& tail_log) {
    FEval::PerK best;
    best.k = k;
    best.log_term = std::numeric_limits<double>::infinity();
    for (const auto& s : specs) {
        const long t_lo = std::max<long>(0, ceil_index(m_star(s.alpha, beta) * k));
        const long t_hi = floor_index(beta * k);
        for (long t = t_lo; t <= t_hi; ++t) {
            const double x = (1.0 - beta / s.alpha) * k + static_cast<double>(t) / s.alpha;
            const double lp = tail_log(s, k, t, x);
            if (lp == -std::numeric_limits<double>::infinity()) continue;
            const double v = ((beta * k - t) / s.alpha) * std::log(s.c) - lp;
            if (v < best.log_term) {
                best.log_term = v;
                best.spec = s;
                best.t = t;
            }
        }
    }
    if (best.log_term == std::numeric_limits<double>::infinity())
        throw std::domain_error("f_value: no feasible (spec, t) for some k");
    (void)n;
    return best;
}

} // namespace

FEval f_value(const SpecList& specs, double beta, long n, TailValue::Mode mode) {
    if (n < 1) throw std::domain_error("f_value: n must be >= 1");
    if (!(beta >= 1.0)) throw std::domain_error("f_value: beta must be >= 1");
    if (mode == TailValue::Mode::exact_rational && n > 60)
        throw std::domain_error("f_value: exact mode requires n <= 60");

    FEval out;
    out.n = n;
    out.log_value = -std::numeric_limits<double>::infinity();

    const long k_hi = floor_index(static_cast<double>(n) / beta);

    if (mode == TailValue::Mode::exact_rational) {
        BinomCache binom(n);
        auto tail = [&](const OracleSpec&, long k, long t, double x) {
            TailValue tv;
            tv.mode = TailValue::Mode::exact_rational;
            tv.exact = hypergeom_tail_exact(binom, n, k, t, x);
            return tv.as_log();
        };
        for (long k = 0; k <= k_hi; ++k)
            out.per_k.push_back(best_term_for_k(specs, beta, n, k, tail));
    } else {
        LogBinomCache binom(n);
        auto tail = [&](const OracleSpec&, long k, long t, double x) {
            return hypergeom_tail_log(binom, n, k, t, x);
        };
        for (long k = 0; k <= k_hi; ++k)
            out.per_k.push_back(best_term_for_k(specs, beta, n, k, tail));
    }

    // Deterministic reduction: max over k, ties to the smaller k.
    for (const auto& rec : out.per_k) {
        if (rec.log_term > out.log_value) {
            out.log_value = rec.log_term;
            out.argmax_k = rec.k;
        }
    }
    return out;
}

double base_estimate(const FEval& f) {
    return std::exp(f.log_value / static_cast<double>(f.n));
}

} // namespace amls
