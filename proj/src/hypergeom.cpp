#include "amls/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "amls/errors.hpp"

namespace amls {

namespace {

constexpr double kIndexSlack = 1e-9;

void check_args(long n, long k, long t, const char* who) {
    if (n < 0 || k < 0 || t < 0 || k > n || t > n)
        throw std::domain_error(std::string(who) + ": need 0 <= k, t <= n");
}

} // namespace

long ceil_index(double x) {
    return static_cast<long>(std::ceil(x - kIndexSlack));
}

long floor_index(double x) {
    return static_cast<long>(std::floor(x + kIndexSlack));
}

BinomCache::BinomCache(long n_max) : zero_(0) {
    rows_.reserve(n_max + 1);
    for (long m = 0; m <= n_max; ++m) {
        std::vector<mpz_class> row(m / 2 + 1);
        row[0] = 1;
        for (long j = 1; j <= m / 2; ++j)
            row[j] = at(m - 1, j - 1) + at(m - 1, j);
        rows_.push_back(std::move(row));
    }
}

const mpz_class& BinomCache::at(long n, long k) const {
    if (k < 0 || k > n) return zero_;
    const long kk = std::min(k, n - k);
    return rows_[n][kk];
}

LogBinomCache::LogBinomCache(long n_max) {
    lf_.resize(std::max<long>(n_max, 1) + 1);
    lf_[0] = 0.0;
    for (long i = 1; i < static_cast<long>(lf_.size()); ++i)
        lf_[i] = lf_[i - 1] + std::log(static_cast<double>(i));
}

double LogBinomCache::log_binom(long n, long k) const {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return lf_[n] - lf_[k] - lf_[n - k];
}

mpq_class hypergeom_tail_exact(const BinomCache& binom, long n, long k, long t, double x) {
    check_args(n, k, t, "hypergeom_tail_exact");
    const long lo = std::max<long>(0, ceil_index(x));
    const long hi = std::min(t, k);
    if (lo > hi) return mpq_class(0);
    mpz_class num = 0;
    for (long y = lo; y <= hi; ++y)
        num += binom.at(k, y) * binom.at(n - k, t - y);
    mpq_class q(num, binom.at(n, t));
    q.canonicalize();
    return q;
}

mpq_class hypergeom_tail_exact(long n, long k, long t, double x) {
    check_args(n, k, t, "hypergeom_tail_exact");
    if (n > 200)
        throw std::domain_error("hypergeom_tail_exact: exact mode requires n <= 200");
    return hypergeom_tail_exact(BinomCache(n), n, k, t, x);
}

mpq_class hypergeom_tail_exact_mirror(const BinomCache& binom, long n, long k, long t, double x) {
    check_args(n, k, t, "hypergeom_tail_exact_mirror");
    const long lo = std::max<long>(0, ceil_index(x));
    const long hi = std::min(t, k);
    if (lo > hi) return mpq_class(0);
    mpz_class num = 0;
    for (long y = lo; y <= hi; ++y)
        num += binom.at(t, y) * binom.at(n - t, k - y);
    mpq_class q(num, binom.at(n, k));
    q.canonicalize();
    return q;
}

mpq_class hypergeom_tail_exact_mirror(long n, long k, long t, double x) {
    if (n > 200)
        throw std::domain_error("hypergeom_tail_exact_mirror: exact mode requires n <= 200");
    return hypergeom_tail_exact_mirror(BinomCache(n), n, k, t, x);
}

double hypergeom_tail_log(const LogBinomCache& binom, long n, long k, long t, double x) {
    check_args(n, k, t, "hypergeom_tail_log");
    const long lo = std::max<long>(0, ceil_index(x));
    const long hi = std::min(t, k);
    if (lo > hi) return -std::numeric_limits<double>::infinity();
    const double ld = binom.log_binom(n, t);
    double peak = -std::numeric_limits<double>::infinity();
    for (long y = lo; y <= hi; ++y) {
        if (t - y > n - k) continue;
        peak = std::max(peak, binom.log_binom(k, y) + binom.log_binom(n - k, t - y) - ld);
    }
    if (peak == -std::numeric_limits<double>::infinity()) return peak;
    double sum = 0.0;
    for (long y = lo; y <= hi; ++y) {
        if (t - y > n - k) continue;
        sum += std::exp(binom.log_binom(k, y) + binom.log_binom(n - k, t - y) - ld - peak);
    }
    const double out = peak + std::log(sum);
    if (out < -1e6)
        throw tolerance_error("hypergeom_tail_log: tail underflows below exp(-1e6)");
    return out;
}

double hypergeom_tail_log(long n, long k, long t, double x) {
    return hypergeom_tail_log(LogBinomCache(n), n, k, t, x);
}

double TailValue::as_double() const {
    if (mode == Mode::exact_rational) return exact.get_d();
    return std::exp(log_value);
}

double TailValue::as_log() const {
    if (mode == Mode::log_float) return log_value;
    if (exact == 0) return -std::numeric_limits<double>::infinity();
    signed long int en, ed;
    const double mn = mpz_get_d_2exp(&en, exact.get_num().get_mpz_t());
    const double md = mpz_get_d_2exp(&ed, exact.get_den().get_mpz_t());
    return std::log(mn) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

TailValue hypergeom_tail(long n, long k, long t, double x, TailValue::Mode mode) {
    TailValue out;
    out.mode = mode;
    if (mode == TailValue::Mode::exact_rational)
        out.exact = hypergeom_tail_exact(n, k, t, x);
    else
        out.log_value = hypergeom_tail_log(n, k, t, x);
    return out;
}

} // namespace amls
