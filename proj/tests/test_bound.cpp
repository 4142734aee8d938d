#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "amls/bound.hpp"
#include "amls/scalar.hpp"

using namespace amls;

TEST_CASE("amlsbound reproduces cited single-oracle values") {
    CHECK(amlsbound(SpecList::single(1.0, 2.69998), 1.1).d ==
          doctest::Approx(1.4156).epsilon(5e-4));
    CHECK(amlsbound(SpecList::single(2.0, 1.0), 1.1).d ==
          doctest::Approx(1.6588).epsilon(5e-4));
    CHECK(amlsbound(SpecList::single(1.0, 2.3146), 1.5).d ==
          doctest::Approx(1.1849806).epsilon(5e-5));
}

TEST_CASE("exact-setting identity 2 - 1/c") {
    for (double c : {2.0, 4.0}) {
        CHECK(amlsbound(SpecList::single(1.0, c), 1.0).d ==
              doctest::Approx(2.0 - 1.0 / c).epsilon(1e-8));
    }
}

TEST_CASE("combined list beats both members where the curves cross") {
    const SpecList fvs({{1.0, 2.69998}, {2.0, 1.0}});
    const BoundResult combined = amlsbound(fvs, 1.5);
    CHECK(combined.d == doctest::Approx(1.2068).epsilon(5e-4));
    CHECK(combined.d < 1.2099);
    CHECK(combined.d < 1.2072);
    // both oracles active at the crossing
    CHECK(combined.active_specs.size() == 2);
}

TEST_CASE("esaamlsbound root values and coincidence with the equal-ratio bound") {
    CHECK(esaamlsbound(1.5, 2.3146) == doctest::Approx(1.2421).epsilon(5e-4));
    CHECK(esaamlsbound(1.1, 2.69998) == doctest::Approx(1.465).epsilon(5e-4));
    for (auto [beta, c] : {std::pair{1.3, 2.0}, {1.8, 5.0}}) {
        CHECK(amlsbound(SpecList::single(beta, c), beta).d ==
              doctest::Approx(esaamlsbound(beta, c)).epsilon(1e-6));
    }
    CHECK_THROWS_AS(esaamlsbound(1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(esaamlsbound(1.5, 1.0), std::domain_error);
}

TEST_CASE("always beats brute force, approaches it as c grows") {
    for (double beta : {1.1, 1.3, 1.5, 1.7, 1.9}) {
        CHECK(amlsbound(SpecList::single(1.0, 3.0), beta).d <
              brute_bound(beta) - 1e-7);
    }
    CHECK(amlsbound(SpecList::single(1.0, 1e6), 1.5).d ==
          doctest::Approx(brute_bound(1.5)).epsilon(5e-3));
    // c monotonicity along the way
    double prev = 0.0;
    for (double c : {2.0, 10.0, 100.0, 1e4}) {
        const double d = amlsbound(SpecList::single(1.0, c), 1.5).d;
        CHECK(d > prev);
        prev = d;
    }
}

TEST_CASE("strictly increasing in alpha below beta") {
    const double beta = 2.0, c = 3.0;
    double prev = 0.0;
    for (double alpha : {1.0, 1.25, 1.5, 1.75, 2.0}) {
        const double d = amlsbound(SpecList::single(alpha, c), beta).d;
        CHECK(d > prev + 1e-9);
        prev = d;
    }
    // hence every alpha < beta strictly beats the equal-ratio benchmark
    CHECK(amlsbound(SpecList::single(1.3, 3.0), 2.0).d < esaamlsbound(2.0, 3.0) - 1e-7);
}

TEST_CASE("near-brute regime pins between the cited brackets") {
    const double d = amlsbound(SpecList::single(2.0, 1024.0), 1.1).d;
    CHECK(d >= 1.7151);
    CHECK(d <= 1.7153);
}

TEST_CASE("bound result invariants") {
    const BoundResult r = amlsbound(SpecList::single(1.0, 2.0), 1.2);
    CHECK(r.d >= 1.0);
    CHECK(r.d <= 2.0);
    CHECK(r.d == doctest::Approx(std::exp(r.ln_d)).epsilon(1e-14));
    CHECK(r.kappa_star > 0.0);
    CHECK(r.kappa_star < 1.0 / 1.2);
    CHECK(r.active_specs.size() == 1);
    CHECK(r.iterations > 0);
    CHECK_THROWS_AS(amlsbound(SpecList::single(1.0, 2.0), 0.9), std::domain_error);
    CHECK_THROWS_AS(amlsbound(SpecList::single(1.0, 2.0), 1.2, 0.0), std::domain_error);
}

TEST_CASE("spec list validation") {
    CHECK_THROWS_AS(SpecList({}), std::invalid_argument);
    CHECK_THROWS_AS(SpecList({{0.9, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(SpecList({{1.0, 0.5}}), std::invalid_argument);
    const SpecList dedup({{1.0, 2.0}, {1.0, 2.0}, {2.0, 1.0}});
    CHECK(dedup.size() == 2);
}
