#include <doctest.h>

#include <cmath>

#include "magmakit/sphere.hpp"

using namespace magmakit;

TEST_CASE("angle wrapping lands in (-pi, pi]") {
    CHECK(wrap_angle(kPi) == kPi);
    CHECK(wrap_angle(-kPi) == kPi);
    CHECK(wrap_angle(3 * kPi) == kPi);
    CHECK(std::abs(wrap_angle(2 * kPi)) < 1e-15);
    CHECK(std::abs(wrap_angle(kPi / 2 + 2 * kPi) - kPi / 2) < 1e-12);
}

TEST_CASE("interior angles add, meeting the wrap boundary") {
    auto b = IntervalElement::interior(0.3);
    CHECK(std::abs(sphere_phi(kPi / 2, b, kPi / 2, b) - kPi) < 1e-12);
    CHECK(std::abs(sphere_phi(0.4, IntervalElement::zero(), 0.0, IntervalElement::zero()) - 0.4) <
          1e-15);
}

TEST_CASE("any pole operand collapses the angle to zero") {
    auto b = IntervalElement::interior(0.3);
    for (int sign : {-1, +1}) {
        auto pole = IntervalElement::pole(sign);
        CHECK(sphere_phi(1.0, pole, 2.0, b) == 0.0);
        CHECK(sphere_phi(1.0, b, 2.0, pole) == 0.0);
        CHECK(sphere_phi(1.0, pole, 2.0, pole) == 0.0);
    }
}

TEST_CASE("point maps: section, projection, equator") {
    Vec3 s0 = sphere_s(0.0);
    CHECK(s0.x == 1.0);
    CHECK(s0.y == 0.0);
    CHECK(s0.z == 0.0);
    CHECK(sphere_q(s0) == 0.0);
    CHECK(sphere_p(sphere_s(0.25)).value == 0.25);
    CHECK(sphere_q(sphere_s(1.0)) == 0.0);  // poles collapse to angle 0
    CHECK(sphere_p(Vec3{0.0, 0.0, 1.0}).is_pole);
}

TEST_CASE("the sphere verification is clean at the documented tolerance") {
    ValidationReport report = sphere_verify(10000, 1e-9);
    if (!report.valid()) {
        for (const auto& v : report.violations) MESSAGE(v.axiom);
    }
    CHECK(report.valid());
}

TEST_CASE("admissibility census: two pole pairs only") {
    // phi00(t, b) = t for interior b; phi00(t, pole) = 0.
    for (int sign : {-1, +1}) {
        auto pole = IntervalElement::pole(sign);
        CHECK(sphere_phi(0.0, IntervalElement::zero(), 0.0, pole) == 0.0);
        CHECK(sphere_phi(1.3, IntervalElement::zero(), 0.0, pole) == 0.0);  // not 1.3
    }
    auto b = IntervalElement::interior(-0.7);
    CHECK(sphere_phi(1.3, IntervalElement::zero(), 0.0, b) == doctest::Approx(1.3));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(sphere_verify(0, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(sphere_verify(10, -1.0), std::invalid_argument);
}
