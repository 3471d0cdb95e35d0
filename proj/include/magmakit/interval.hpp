#pragma once

// The closed interval [-1, 1] as a unitary magma: rapidity-style addition
// (b + b') / (bb' + 1) in the interior, with the endpoints acting as a pair
// of absorbing poles that multiply to the unit.  The structure is carried
// over from the multiplicative half-line [0, +inf] with poles adjoined,
// through x -> (1+x)/(1-x).

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "magmakit/magma.hpp"

namespace magmakit {

// Fixed default seed for every sampled check; override via --seed.
inline constexpr std::uint64_t kDefaultSeed = 987654321;

// Deterministic double sampling: 53-bit mantissas drawn from mt19937_64,
// so streams are reproducible across platforms and standard libraries.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform in the open interval (-1, 1).
    double interior() {
        for (;;) {
            double v = 2.0 * unit() - 1.0;
            if (v > -1.0 && v < 1.0) return v;
        }
    }

    // Uniform angle in (-pi, pi].
    double angle() {
        const double pi = 3.14159265358979323846;
        return pi - 2.0 * pi * unit();
    }

private:
    std::mt19937_64 gen_;
};

// A point of [-1, 1]; the endpoints are tracked exactly so pole arithmetic
// never depends on floating-point comparisons against computed values.
struct IntervalElement {
    double value = 0.0;
    bool is_pole = false;

    static IntervalElement zero() { return {0.0, false}; }
    static IntervalElement interior(double v) {
        if (!(v > -1.0 && v < 1.0))
            throw std::invalid_argument("IntervalElement::interior: value must lie in (-1, 1)");
        return {v, false};
    }
    static IntervalElement pole(int sign) {
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("IntervalElement::pole: sign must be +1 or -1");
        return {static_cast<double>(sign), true};
    }
    // Classifies a value in [-1, 1]; exactly +-1 becomes a pole.
    static IntervalElement of(double v) {
        if (v == 1.0 || v == -1.0) return {v, true};
        return interior(v);
    }
};

// The interval operation: interior pairs use (b + b') / (bb' + 1); any pole
// operand follows the pole rows (-1 and +1 absorb the interior, equal poles
// are idempotent, opposite poles give 0).
inline IntervalElement interval_oplus(IntervalElement a, IntervalElement b) {
    if (a.is_pole && b.is_pole) {
        if (a.value == b.value) return a;
        return IntervalElement::zero();
    }
    if (a.is_pole) return a;
    if (b.is_pole) return b;
    return IntervalElement::of((a.value + b.value) / (a.value * b.value + 1.0));
}

// The half-line transport x -> (1+x)/(1-x) and its inverse y -> (y-1)/(y+1).
inline double halfline_forward(double x) { return (1.0 + x) / (1.0 - x); }
inline double halfline_backward(double y) { return (y - 1.0) / (y + 1.0); }

// Checks that the interval operation is the half-line multiplication seen
// through the transport: sampled interior identities within tol, and the
// pole rows against the adjoined-pole table of the half-line exactly.
// Axiom ids: pole-table {row, col}, transport {sample}, section-gf {sample},
// section-fg {sample}, unit-row {sample}.
inline ValidationReport halfline_transport_check(int samples, double tol,
                                                 std::uint64_t seed = kDefaultSeed) {
    if (samples < 1) throw std::invalid_argument("halfline_transport_check: samples must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("halfline_transport_check: tol must be positive");
    ValidationReport report;

    // Pole dictionary: interval {0, -1, +1} <-> half-line {1, 0, inf},
    // which is adjoin_poles(trivial) with indices {0, 1, 2}.
    const FiniteMagma poles = adjoin_poles(trivial_magma());
    const IntervalElement dict[3] = {IntervalElement::zero(), IntervalElement::pole(-1),
                                     IntervalElement::pole(+1)};
    auto dict_index = [&](IntervalElement e) {
        if (!e.is_pole) return 0;
        return e.value < 0.0 ? 1 : 2;
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (dict_index(interval_oplus(dict[i], dict[j])) != poles.op(i, j))
                report.add("pole-table", {i, j});

    SampleRng rng(seed);
    for (int i = 0; i < samples; ++i) {
        double b = rng.interior();
        double b2 = rng.interior();
        IntervalElement r = interval_oplus(IntervalElement::interior(b),
                                           IntervalElement::interior(b2));
        double through = halfline_backward(halfline_forward(b) * halfline_forward(b2));
        if (std::abs(r.value - through) > tol) report.add("transport", {i});
        if (std::abs(halfline_backward(halfline_forward(b)) - b) > tol)
            report.add("section-gf", {i});
        double y = halfline_forward(b);
        if (std::abs(halfline_forward(halfline_backward(y)) - y) > tol * (1.0 + std::abs(y)))
            report.add("section-fg", {i});
        IntervalElement u = interval_oplus(IntervalElement::zero(), IntervalElement::interior(b));
        if (u.value != b || u.is_pole) report.add("unit-row", {i});
    }
    return report;
}

}  // namespace magmakit
