#pragma once

// The unit sphere as a retraction point from the circle to [-1, 1]: the
// action adds angles while the heights stay interior and collapses to
// angle 0 as soon as a pole is involved, so the admissible pairs are the
// interior bands plus the two pole pairs (0, -1) and (0, +1).
//
// Pole cases are evaluated exactly through the IntervalElement flags;
// only genuinely trigonometric identities are compared within a tolerance.

#include <cmath>

#include "magmakit/interval.hpp"

namespace magmakit {

inline constexpr double kPi = 3.14159265358979323846;

// Normalizes an angle into (-pi, pi].
inline double wrap_angle(double t) {
    double r = std::remainder(t, 2.0 * kPi);
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

// True when the two angles agree modulo 2 pi within tol.
inline bool angles_close(double a, double b, double tol) {
    return std::abs(wrap_angle(a - b)) <= tol;
}

// The sphere action on angles: interior heights add the angles; any pole
// operand collapses the result to angle 0.  The pole rule is the unique
// completion of the both-interior and both-pole cases for which all four
// action axioms hold together with the interval pole arithmetic.
inline double sphere_phi(double t, IntervalElement b, double t2, IntervalElement b2) {
    if (b.is_pole || b2.is_pole) return 0.0;
    return wrap_angle(t + t2);
}

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

// Projection to the height coordinate.
inline IntervalElement sphere_p(const Vec3& v) { return IntervalElement::of(v.z); }

// Angle of the horizontal component; both poles map to angle 0.
inline double sphere_q(const Vec3& v) {
    if (v.z == 1.0 || v.z == -1.0) return 0.0;
    return wrap_angle(std::atan2(v.y, v.x));
}

// Section through the zero meridian.
inline Vec3 sphere_s(double z) { return {std::sqrt(1.0 - z * z), 0.0, z}; }

// The identification of an admissible pair (angle, height) with a unit
// vector.
inline Vec3 sphere_point(double t, IntervalElement b) {
    double r = std::sqrt(1.0 - b.value * b.value);
    return {r * std::cos(t), r * std::sin(t), b.value};
}

// Samples the four action axioms (exact on every pole combination, within
// tol on interior samples), the point maps on sampled unit vectors, and
// the admissibility census: (t, b) is admissible exactly when b is
// interior or t = 0, so exactly two pole pairs survive.
// Axiom ids: act1 {sample}, act2 {sample, pole-case}, act3 {sample},
// act4-interior {sample}, act4-pole {case}, pole-census {case},
// ps {sample}, qs {sample}, qk {sample}, s-equator {}, pair-map {sample}.
inline ValidationReport sphere_verify(int samples, double tol,
                                      std::uint64_t seed = kDefaultSeed) {
    if (samples < 1) throw std::invalid_argument("sphere_verify: samples must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("sphere_verify: tol must be positive");
    ValidationReport report;
    SampleRng rng(seed);

    const IntervalElement minus = IntervalElement::pole(-1);
    const IntervalElement plus = IntervalElement::pole(+1);

    auto phi00 = [&](double t, IntervalElement b) {
        return sphere_phi(t, IntervalElement::zero(), 0.0, b);
    };

    for (int i = 0; i < samples; ++i) {
        double t = rng.angle();
        double t2 = rng.angle();
        IntervalElement b = IntervalElement::interior(rng.interior());
        IntervalElement b2 = IntervalElement::interior(rng.interior());
        IntervalElement z = IntervalElement::zero();

        if (!angles_close(sphere_phi(t, z, 0.0, z), t, tol)) report.add("act1", {i});
        if (!angles_close(sphere_phi(0.0, z, t, z), t, tol)) report.add("act1", {i});

        // act2 across interior heights and both poles.
        const IntervalElement heights[3] = {b, minus, plus};
        for (int h = 0; h < 3; ++h) {
            IntervalElement bb = heights[h];
            double v1 = sphere_phi(t, bb, 0.0, z);
            double v2 = sphere_phi(t, z, 0.0, bb);
            double v3 = sphere_phi(0.0, z, t, bb);
            if (!angles_close(v1, v2, tol) || !angles_close(v2, v3, tol))
                report.add("act2", {i, h});
        }

        if (!angles_close(sphere_phi(0.0, b, 0.0, b2), 0.0, tol)) report.add("act3", {i});
        if (sphere_phi(0.0, minus, 0.0, plus) != 0.0) report.add("act3", {i, -1});

        // act4 with everything interior: both sides are t + t2 since the
        // interior is closed under the interval operation.
        {
            double lhs = sphere_phi(t, b, t2, b2);
            IntervalElement sum = interval_oplus(b, b2);
            double inner = sphere_phi(phi00(t, b), b, phi00(t2, b2), b2);
            double rhs = phi00(inner, sum);
            if (!angles_close(lhs, rhs, tol)) report.add("act4-interior", {i});
        }
    }

    // act4 on the eight pole combinations: (pole, interior), (interior,
    // pole) and the four (pole, pole) patterns, with sampled angles and
    // interior heights.  Everything collapses exactly.
    {
        double t = rng.angle(), t2 = rng.angle();
        IntervalElement b = IntervalElement::interior(rng.interior());
        const IntervalElement poles[2] = {minus, plus};
        int case_id = 0;
        auto check_case = [&](IntervalElement u, IntervalElement v) {
            double lhs = sphere_phi(t, u, t2, v);
            IntervalElement sum = interval_oplus(u, v);
            double inner = sphere_phi(phi00(t, u), u, phi00(t2, v), v);
            double rhs = phi00(inner, sum);
            if (lhs != rhs) report.add("act4-pole", {case_id});
            ++case_id;
        };
        for (const IntervalElement& pole : poles) {
            check_case(pole, b);
            check_case(b, pole);
        }
        for (const IntervalElement& u : poles)
            for (const IntervalElement& v : poles) check_case(u, v);
    }

    // Admissibility census: phi00(t, pole) = 0 kills every nonzero angle,
    // so the surviving pole pairs are exactly (0, -1) and (0, +1).
    {
        int case_id = 0;
        for (const IntervalElement& pole : {minus, plus}) {
            if (phi00(0.0, pole) != 0.0) report.add("pole-census", {case_id});
            for (int i = 0; i < samples; ++i) {
                double t = rng.angle();
                if (t != 0.0 && phi00(t, pole) == t) report.add("pole-census", {case_id, i});
            }
            ++case_id;
        }
        for (int i = 0; i < samples; ++i) {
            IntervalElement b = IntervalElement::interior(rng.interior());
            double t = rng.angle();
            if (phi00(t, b) != t) report.add("pole-census", {2, i});
        }
    }

    // Point maps on sampled unit vectors.
    for (int i = 0; i < samples; ++i) {
        double z = rng.interior();
        Vec3 sz = sphere_s(z);
        if (sphere_p(sz).value != z) report.add("ps", {i});
        if (sphere_q(sz) != 0.0) report.add("qs", {i});
        double t = rng.angle();
        Vec3 kt = sphere_point(t, IntervalElement::zero());
        if (!angles_close(sphere_q(kt), t, tol)) report.add("qk", {i});
        // Pair-map round trip through an admissible pair.
        IntervalElement b = IntervalElement::interior(rng.interior());
        Vec3 v = sphere_point(t, b);
        if (!angles_close(sphere_q(v), t, tol) || std::abs(sphere_p(v).value - b.value) > tol)
            report.add("pair-map", {i});
    }
    for (const IntervalElement& pole : {minus, plus}) {
        Vec3 v = sphere_point(0.0, pole);
        if (sphere_q(v) != 0.0 || sphere_p(v).value != pole.value) report.add("pair-map", {-1});
        if (sphere_q(sphere_s(pole.value)) != 0.0) report.add("qs", {-1});
    }
    Vec3 equator = sphere_s(0.0);
    if (equator.x != 1.0 || equator.y != 0.0 || equator.z != 0.0) report.add("s-equator", {});
    return report;
}

}  // namespace magmakit
