#include <doctest.h>

#include <cmath>

#include "magmakit/interval.hpp"

using namespace magmakit;

TEST_CASE("zero is the unit of the interval magma") {
    IntervalElement b = IntervalElement::interior(0.37);
    CHECK(interval_oplus(IntervalElement::zero(), b).value == 0.37);
    CHECK(interval_oplus(b, IntervalElement::zero()).value == 0.37);
    CHECK(interval_oplus(IntervalElement::zero(), IntervalElement::pole(-1)).value == -1.0);
}

TEST_CASE("interior composition follows the rational formula") {
    IntervalElement r = interval_oplus(IntervalElement::interior(0.5),
                                       IntervalElement::interior(0.5));
    CHECK(std::abs(r.value - 0.8) < 1e-15);
    CHECK_FALSE(r.is_pole);
}

TEST_CASE("the pole rows are exact") {
    auto m = IntervalElement::pole(-1);
    auto p = IntervalElement::pole(+1);
    auto b = IntervalElement::interior(0.25);
    CHECK(interval_oplus(m, m).value == -1.0);
    CHECK(interval_oplus(p, p).value == 1.0);
    CHECK(interval_oplus(m, p).value == 0.0);
    CHECK(interval_oplus(p, m).value == 0.0);
    CHECK(interval_oplus(m, b).value == -1.0);
    CHECK(interval_oplus(b, m).value == -1.0);
    CHECK(interval_oplus(p, b).value == 1.0);
    CHECK(interval_oplus(b, p).value == 1.0);
}

TEST_CASE("the endpoint arithmetic is not associative") {
    auto m = IntervalElement::pole(-1);
    auto p = IntervalElement::pole(+1);
    IntervalElement lhs = interval_oplus(interval_oplus(p, m), m);
    IntervalElement rhs = interval_oplus(p, interval_oplus(m, m));
    CHECK(lhs.value == -1.0);
    CHECK(rhs.value == 0.0);
}

TEST_CASE("interior composition stays interior and is associative and commutative") {
    SampleRng rng(kDefaultSeed);
    for (int i = 0; i < 10000; ++i) {
        auto a = IntervalElement::interior(rng.interior());
        auto b = IntervalElement::interior(rng.interior());
        auto c = IntervalElement::interior(rng.interior());
        IntervalElement ab = interval_oplus(a, b);
        CHECK_FALSE(ab.is_pole);
        CHECK(std::abs(ab.value) < 1.0);
        CHECK(std::abs(interval_oplus(a, b).value - interval_oplus(b, a).value) <= 1e-12);
        double assoc_l = interval_oplus(ab, c).value;
        double assoc_r = interval_oplus(a, interval_oplus(b, c)).value;
        CHECK(std::abs(assoc_l - assoc_r) <= 1e-12);
    }
}

TEST_CASE("the half-line transport check is clean at the documented tolerance") {
    ValidationReport report = halfline_transport_check(10000, 1e-12);
    CHECK(report.valid());
}

TEST_CASE("the transport check is deterministic in the seed") {
    auto r1 = halfline_transport_check(100, 1e-12, 42);
    auto r2 = halfline_transport_check(100, 1e-12, 42);
    CHECK(r1.violations.size() == r2.violations.size());
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(halfline_transport_check(0, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(halfline_transport_check(10, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(IntervalElement::interior(1.0), std::invalid_argument);
    CHECK_THROWS_AS(IntervalElement::pole(0), std::invalid_argument);
    CHECK(IntervalElement::of(1.0).is_pole);
    CHECK_FALSE(IntervalElement::of(0.999999).is_pole);
}
