#pragma once

// Retraction points: a split epimorphism p: A -> B with section s, together
// with a kernel-side map pair k: X -> A, q: A -> X such that every element
// of A decomposes as kq(a) + sp(a).  This header verifies the defining
// equations, derives the induced structure on X, builds the universal maps
// in and out of A, pulls points back along morphisms into B, composes
// points, and checks the split short five lemma transport.

#include <array>
#include <optional>

#include "magmakit/magma.hpp"

namespace magmakit {

// (A, k, q, s, p) from the index set {0..x_size-1} to the unitary magma B.
// p and s must be morphisms; k and q are plain maps.
struct RetractionPoint {
    FiniteMagma A;
    FiniteMagma B;
    int x_size = 0;
    ElementMap k;  // X -> A
    ElementMap q;  // A -> X
    ElementMap s;  // B -> A
    ElementMap p;  // A -> B
};

namespace detail {

inline void require_point_shape(const RetractionPoint& pt, const char* who) {
    require_magma_shape(pt.A, who);
    require_magma_shape(pt.B, who);
    if (pt.x_size < 1) throw std::invalid_argument(std::string(who) + ": x_size must be positive");
    require_map_shape(pt.k, pt.x_size, pt.A.size, who);
    require_map_shape(pt.q, pt.A.size, pt.x_size, who);
    require_map_shape(pt.s, pt.B.size, pt.A.size, who);
    require_map_shape(pt.p, pt.A.size, pt.B.size, who);
}

}  // namespace detail

// Checks all point equations plus morphism-hood of p and s.
// Axiom ids and witnesses, scanned in this order:
//   s-morphism {b,b'} / s-unit {}, p-morphism {a,a'} / p-unit {},
//   ps=1 {b}, pk=0 {x}, qk=1 {x}, qs=q0 {b}, kq+sp=1 {a}.
inline ValidationReport verify_point(const RetractionPoint& pt) {
    detail::require_point_shape(pt, "verify_point");
    const FiniteMagma& A = pt.A;
    const FiniteMagma& B = pt.B;
    ValidationReport report;
    if (pt.s(B.unit) != A.unit) report.add("s-unit", {pt.s(B.unit)});
    for (int b = 0; b < B.size; ++b)
        for (int b2 = 0; b2 < B.size; ++b2)
            if (pt.s(B.op(b, b2)) != A.op(pt.s(b), pt.s(b2))) report.add("s-morphism", {b, b2});
    if (pt.p(A.unit) != B.unit) report.add("p-unit", {pt.p(A.unit)});
    for (int a = 0; a < A.size; ++a)
        for (int a2 = 0; a2 < A.size; ++a2)
            if (pt.p(A.op(a, a2)) != B.op(pt.p(a), pt.p(a2))) report.add("p-morphism", {a, a2});
    for (int b = 0; b < B.size; ++b)
        if (pt.p(pt.s(b)) != b) report.add("ps=1", {b});
    for (int x = 0; x < pt.x_size; ++x)
        if (pt.p(pt.k(x)) != B.unit) report.add("pk=0", {x});
    for (int x = 0; x < pt.x_size; ++x)
        if (pt.q(pt.k(x)) != x) report.add("qk=1", {x});
    const int zero_x = pt.q(A.unit);
    for (int b = 0; b < B.size; ++b)
        if (pt.q(pt.s(b)) != zero_x) report.add("qs=q0", {b});
    for (int a = 0; a < A.size; ++a)
        if (A.op(pt.k(pt.q(a)), pt.s(pt.p(a))) != a) report.add("kq+sp=1", {a});
    return report;
}

inline bool is_valid_point(const RetractionPoint& pt) { return verify_point(pt).valid(); }

// The magma structure X inherits from a valid point: unit q(0) and
// operation x + x' = q(k(x) + k(x')).  k is a morphism for this structure.
inline FiniteMagma induced_x_magma(const RetractionPoint& pt) {
    detail::require_point_shape(pt, "induced_x_magma");
    FiniteMagma x(pt.x_size, pt.q(pt.A.unit));
    for (int a = 0; a < pt.x_size; ++a)
        for (int b = 0; b < pt.x_size; ++b) x.at(a, b) = pt.q(pt.A.op(pt.k(a), pt.k(b)));
    if (!verify_unitary_magma(x).valid())
        throw std::logic_error("induced_x_magma: unit laws failed; the input is not a valid point");
    return x;
}

// Result of building a map that exists only under a compatibility
// criterion: either the map, or a report carrying the first failure.
struct MorphismResult {
    std::optional<ElementMap> map;
    ValidationReport report;

    bool present() const { return map.has_value(); }
};

// The unique candidate w: A -> Z with wk = u and ws = v is
// w(a) = u(q(a)) + v(p(a)); it is a morphism exactly when the displayed
// sum is compatible with the operation of A.  Witness: compat {a, a'}.
// Preconditions (throw): v a morphism B -> Z, u(q(0)) the unit of Z.
inline MorphismResult out_morphism(const RetractionPoint& pt, const ElementMap& u,
                                   const ElementMap& v, const FiniteMagma& Z) {
    detail::require_point_shape(pt, "out_morphism");
    detail::require_magma_shape(Z, "out_morphism");
    detail::require_map_shape(u, pt.x_size, Z.size, "out_morphism");
    detail::require_map_shape(v, pt.B.size, Z.size, "out_morphism");
    if (!is_morphism(v, pt.B, Z))
        throw std::invalid_argument("out_morphism: v must be a morphism B -> Z");
    if (u(pt.q(pt.A.unit)) != Z.unit)
        throw std::invalid_argument("out_morphism: u must send q(0) to the unit of Z");
    ElementMap w(pt.A.size, Z.size);
    for (int a = 0; a < pt.A.size; ++a) w.values[static_cast<std::size_t>(a)] = Z.op(u(pt.q(a)), v(pt.p(a)));
    MorphismResult result;
    for (int a = 0; a < pt.A.size; ++a)
        for (int a2 = 0; a2 < pt.A.size; ++a2)
            if (w(pt.A.op(a, a2)) != Z.op(w(a), w(a2))) {
                result.report.add("compat", {a, a2});
                return result;
            }
    result.map = std::move(w);
    return result;
}

// The unique candidate h: Z -> A with qh = f and ph = g is
// h(z) = k(f(z)) + s(g(z)).  It is returned when it is a morphism and its
// q-composite really is f; the retraction side can fail on points whose
// pair map (q, p) is not injective on the relevant image, and such a
// failure is reported with the witness z.  Witnesses: compat {z, z'},
// qh=f {z}.  Preconditions (throw): g a morphism, f(unit) = q(0).
inline MorphismResult in_morphism(const RetractionPoint& pt, const ElementMap& f,
                                  const ElementMap& g, const FiniteMagma& Z) {
    detail::require_point_shape(pt, "in_morphism");
    detail::require_magma_shape(Z, "in_morphism");
    detail::require_map_shape(f, Z.size, pt.x_size, "in_morphism");
    detail::require_map_shape(g, Z.size, pt.B.size, "in_morphism");
    if (!is_morphism(g, Z, pt.B))
        throw std::invalid_argument("in_morphism: g must be a morphism Z -> B");
    if (f(Z.unit) != pt.q(pt.A.unit))
        throw std::invalid_argument("in_morphism: f must send the unit of Z to q(0)");
    ElementMap h(Z.size, pt.A.size);
    for (int z = 0; z < Z.size; ++z)
        h.values[static_cast<std::size_t>(z)] = pt.A.op(pt.k(f(z)), pt.s(g(z)));
    MorphismResult result;
    for (int z = 0; z < Z.size; ++z)
        for (int z2 = 0; z2 < Z.size; ++z2)
            if (h(Z.op(z, z2)) != pt.A.op(h(z), h(z2))) {
                result.report.add("compat", {z, z2});
                return result;
            }
    for (int z = 0; z < Z.size; ++z)
        if (pt.q(h(z)) != f(z)) {
            result.report.add("qh=f", {z});
            return result;
        }
    result.map = std::move(h);
    return result;
}

// Pullback of the point along a morphism g: Z -> B.  The new carrier is
// the fibre product {(a, z) : p(a) = g(z)} inside A x Z with componentwise
// operation, listed in lexicographic (a, z) order; the kernel side is
// unchanged.
inline RetractionPoint pullback_point(const RetractionPoint& pt, const ElementMap& g,
                                      const FiniteMagma& Z) {
    detail::require_point_shape(pt, "pullback_point");
    detail::require_magma_shape(Z, "pullback_point");
    detail::require_map_shape(g, Z.size, pt.B.size, "pullback_point");
    if (!is_morphism(g, Z, pt.B))
        throw std::invalid_argument("pullback_point: g must be a morphism Z -> B");

    std::vector<std::pair<int, int>> elems;
    std::vector<int> index(static_cast<std::size_t>(pt.A.size) * Z.size, -1);
    for (int a = 0; a < pt.A.size; ++a)
        for (int z = 0; z < Z.size; ++z)
            if (pt.p(a) == g(z)) {
                index[static_cast<std::size_t>(a) * Z.size + z] = static_cast<int>(elems.size());
                elems.emplace_back(a, z);
            }
    auto pair_index = [&](int a, int z) { return index[static_cast<std::size_t>(a) * Z.size + z]; };

    RetractionPoint out;
    out.B = Z;
    out.x_size = pt.x_size;
    out.A = FiniteMagma(static_cast<int>(elems.size()),
                        pair_index(pt.A.unit, Z.unit));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            out.A.at(static_cast<int>(i), static_cast<int>(j)) =
                pair_index(pt.A.op(elems[i].first, elems[j].first),
                           Z.op(elems[i].second, elems[j].second));
    out.k = ElementMap(pt.x_size, out.A.size);
    for (int x = 0; x < pt.x_size; ++x)
        out.k.values[static_cast<std::size_t>(x)] = pair_index(pt.k(x), Z.unit);
    out.q = ElementMap(out.A.size, pt.x_size);
    for (std::size_t i = 0; i < elems.size(); ++i)
        out.q.values[i] = pt.q(elems[i].first);
    out.s = ElementMap(Z.size, out.A.size);
    for (int z = 0; z < Z.size; ++z)
        out.s.values[static_cast<std::size_t>(z)] = pair_index(pt.s(g(z)), z);
    out.p = ElementMap(out.A.size, Z.size);
    for (std::size_t i = 0; i < elems.size(); ++i)
        out.p.values[i] = elems[i].second;
    return out;
}

struct ComposeResult {
    std::optional<RetractionPoint> point;
    // First (x, y, c) where k(x) + s(k'(y)) failed to reassociate with
    // s(s'(c)); empty when composition succeeded.
    std::optional<std::array<int, 3>> witness;

    bool present() const { return point.has_value(); }
};

namespace detail {

inline void require_composable_shape(const RetractionPoint& pt, const RetractionPoint& pt2,
                                     const char* who) {
    require_point_shape(pt, who);
    require_point_shape(pt2, who);
    if (!(pt2.A == pt.B))
        throw std::invalid_argument(std::string(who) +
                                    ": the carrier of the second point must be the base of the first");
}

}  // namespace detail

// Builds the composite tuple (A, k'', q'', ss', p'p) from X'' = A x_B Y to C
// without checking the reassociation condition; verify_point decides its
// validity.  X'' is the fibre set {(a, y) : p(a) = k'(y)} in lexicographic
// order.
inline RetractionPoint composite_candidate(const RetractionPoint& pt, const RetractionPoint& pt2) {
    detail::require_composable_shape(pt, pt2, "composite_candidate");
    std::vector<std::pair<int, int>> fibre;
    std::vector<int> index(static_cast<std::size_t>(pt.A.size) * pt2.x_size, -1);
    for (int a = 0; a < pt.A.size; ++a)
        for (int y = 0; y < pt2.x_size; ++y)
            if (pt.p(a) == pt2.k(y)) {
                index[static_cast<std::size_t>(a) * pt2.x_size + y] = static_cast<int>(fibre.size());
                fibre.emplace_back(a, y);
            }

    RetractionPoint out;
    out.A = pt.A;
    out.B = pt2.B;
    out.x_size = static_cast<int>(fibre.size());
    out.k = ElementMap(out.x_size, pt.A.size);
    for (std::size_t i = 0; i < fibre.size(); ++i) out.k.values[i] = fibre[i].first;
    out.q = ElementMap(pt.A.size, out.x_size);
    for (int a = 0; a < pt.A.size; ++a) {
        int y = pt2.q(pt.p(a));
        // q''(a) = (kq(a) + s(k'(q'(p(a)))), q'(p(a)))
        int first = pt.A.op(pt.k(pt.q(a)), pt.s(pt2.k(y)));
        out.q.values[static_cast<std::size_t>(a)] = index[static_cast<std::size_t>(first) * pt2.x_size + y];
    }
    out.s = ElementMap(pt2.B.size, pt.A.size);
    for (int c = 0; c < pt2.B.size; ++c)
        out.s.values[static_cast<std::size_t>(c)] = pt.s(pt2.s(c));
    out.p = ElementMap(pt.A.size, pt2.B.size);
    for (int a = 0; a < pt.A.size; ++a)
        out.p.values[static_cast<std::size_t>(a)] = pt2.p(pt.p(a));
    return out;
}

// Sufficient condition for composability with every point over B:
// k(x) + s(b + b') = (k(x) + s(b)) + s(b') for all x, b, b'.
inline bool stably_composable(const RetractionPoint& pt) {
    detail::require_point_shape(pt, "stably_composable");
    for (int x = 0; x < pt.x_size; ++x)
        for (int b = 0; b < pt.B.size; ++b)
            for (int b2 = 0; b2 < pt.B.size; ++b2)
                if (pt.A.op(pt.k(x), pt.s(pt.B.op(b, b2))) !=
                    pt.A.op(pt.A.op(pt.k(x), pt.s(b)), pt.s(b2)))
                    return false;
    return true;
}

// Composes pt (from X to B) with pt2 (from Y to C, carried by B).  The
// composite exists exactly when (k(x) + s(k'(y))) + s(s'(c)) =
// k(x) + s(k'(y) + s'(c)) for all x, y, c; the first failing triple is
// returned otherwise.
inline ComposeResult compose_points(const RetractionPoint& pt, const RetractionPoint& pt2) {
    detail::require_composable_shape(pt, pt2, "compose_points");
    ComposeResult result;
    for (int x = 0; x < pt.x_size; ++x)
        for (int y = 0; y < pt2.x_size; ++y)
            for (int c = 0; c < pt2.B.size; ++c) {
                int lhs = pt.A.op(pt.A.op(pt.k(x), pt.s(pt2.k(y))), pt.s(pt2.s(c)));
                int rhs = pt.A.op(pt.k(x), pt.s(pt.B.op(pt2.k(y), pt2.s(c))));
                if (lhs != rhs) {
                    result.witness = {x, y, c};
                    return result;
                }
            }
    result.point = composite_candidate(pt, pt2);
    return result;
}

struct SsflResult {
    // beta(y) = k(q'(y)) + s(p'(y)), the verified two-sided inverse of alpha.
    std::optional<ElementMap> inverse;
    ValidationReport report;

    bool verified() const { return inverse.has_value(); }
};

// Split short five lemma transport: if alpha: A -> A' is a morphism with
// alpha k = k', alpha s = s' and q' alpha = q, then alpha is invertible and
// the inverse is returned.  Otherwise the failed condition is reported:
//   alpha-unit {}, alpha-morphism {a,a'}, alpha-k {x}, alpha-s {b},
//   q-compat {a}.
inline SsflResult ssfl_transport(const RetractionPoint& pt, const RetractionPoint& pt2,
                                 const ElementMap& alpha) {
    detail::require_point_shape(pt, "ssfl_transport");
    detail::require_point_shape(pt2, "ssfl_transport");
    if (pt.x_size != pt2.x_size || pt.B.size != pt2.B.size)
        throw std::invalid_argument("ssfl_transport: the two points must share their ends");
    detail::require_map_shape(alpha, pt.A.size, pt2.A.size, "ssfl_transport");

    SsflResult result;
    if (alpha(pt.A.unit) != pt2.A.unit) result.report.add("alpha-unit", {alpha(pt.A.unit)});
    for (int a = 0; a < pt.A.size; ++a)
        for (int a2 = 0; a2 < pt.A.size; ++a2)
            if (alpha(pt.A.op(a, a2)) != pt2.A.op(alpha(a), alpha(a2))) {
                result.report.add("alpha-morphism", {a, a2});
                break;
            }
    for (int x = 0; x < pt.x_size; ++x)
        if (alpha(pt.k(x)) != pt2.k(x)) {
            result.report.add("alpha-k", {x});
            break;
        }
    for (int b = 0; b < pt.B.size; ++b)
        if (alpha(pt.s(b)) != pt2.s(b)) {
            result.report.add("alpha-s", {b});
            break;
        }
    for (int a = 0; a < pt.A.size; ++a)
        if (pt2.q(alpha(a)) != pt.q(a)) {
            result.report.add("q-compat", {a});
            break;
        }
    if (!result.report.valid()) return result;

    ElementMap beta(pt2.A.size, pt.A.size);
    for (int y = 0; y < pt2.A.size; ++y)
        beta.values[static_cast<std::size_t>(y)] = pt.A.op(pt.k(pt2.q(y)), pt.s(pt2.p(y)));
    for (int y = 0; y < pt2.A.size; ++y)
        if (alpha(beta(y)) != y)
            throw std::logic_error("ssfl_transport: alpha(beta) is not the identity");
    for (int a = 0; a < pt.A.size; ++a)
        if (beta(alpha(a)) != a)
            throw std::logic_error("ssfl_transport: beta(alpha) is not the identity");
    result.inverse = std::move(beta);
    return result;
}

}  // namespace magmakit
