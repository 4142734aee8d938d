#pragma once

#include <gmpxx.h>

#include <vector>

namespace amls {

/// Exact binomial coefficients for a fixed universe size, backed by a
/// Pascal-triangle row cache. Immutable after construction, so instances
/// can be shared across threads freely.
class BinomCache {
public:
    explicit BinomCache(long n_max);
    const mpz_class& at(long n, long k) const;
    long n_max() const { return static_cast<long>(rows_.size()) - 1; }

private:
    std::vector<std::vector<mpz_class>> rows_; // rows_[n][k] for k <= n/2
    mpz_class zero_;
};

/// Log-space binomials via cached log-factorials. Immutable after
/// construction.
class LogBinomCache {
public:
    explicit LogBinomCache(long n_max);
    double log_binom(long n, long k) const; // -inf outside 0 <= k <= n
    long n_max() const { return static_cast<long>(lf_.size()) - 1; }

private:
    std::vector<double> lf_;
};

/// Probability that a uniform t-subset of [n] meets a fixed k-subset in at
/// least x elements, represented either as an exact rational or in log space.
struct TailValue {
    enum class Mode { exact_rational, log_float };
    Mode mode = Mode::log_float;
    mpq_class exact;        // valid in exact_rational mode; 0 <= exact <= 1
    double log_value = 0.0; // valid in log_float mode; -inf encodes p == 0

    double as_double() const;
    double as_log() const;
};

/// Exact tail: sum_{y = max(0, ceil(x))}^{min(t,k)} C(k,y) C(n-k,t-y) / C(n,t).
/// The empty sum is 0. Requires 0 <= k, t <= n and n <= 200.
mpq_class hypergeom_tail_exact(long n, long k, long t, double x);
mpq_class hypergeom_tail_exact(const BinomCache& binom, long n, long k, long t, double x);

/// Same tail in natural-log space. Returns -inf for an empty sum; throws
/// tolerance_error if the value underflows below exp(-1e6).
double hypergeom_tail_log(long n, long k, long t, double x);
double hypergeom_tail_log(const LogBinomCache& binom, long n, long k, long t, double x);

/// Mode-dispatching wrapper around the two evaluators above.
TailValue hypergeom_tail(long n, long k, long t, double x, TailValue::Mode mode);

/// The mirrored summation C(t,y) C(n-t,k-y) / C(n,k) over the same y-range;
/// algebraically identical to hypergeom_tail_exact and kept as the
/// independent route for the dual-form check.
mpq_class hypergeom_tail_exact_mirror(long n, long k, long t, double x);
mpq_class hypergeom_tail_exact_mirror(const BinomCache& binom, long n, long k, long t, double x);

/// Integer ceiling/floor with a small guard against roundoff in products
/// like beta*k; used wherever a real bound is converted to an index.
long ceil_index(double x);
long floor_index(double x);

} // namespace amls
