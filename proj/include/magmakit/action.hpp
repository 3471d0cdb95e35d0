#pragma once

// B-actions on a pointed set X: a four-argument table
// phi : X x B x X x B -> X subject to four axioms (act1..act4), the
// semidirect product it induces on the admissible pairs, B-morphisms
// between actions, and the morphisms in and out of a semidirect product.

#include <array>
#include <optional>
#include <utility>

#include "magmakit/magma.hpp"
#include "magmakit/point.hpp"

namespace magmakit {

// Dense action table.  The b slots use the unit of B as their zero; the
// x slots use zero_x.
struct Action {
    FiniteMagma B;
    int x_size = 0;
    int zero_x = 0;
    std::vector<int> phi;  // row-major over (x, b, x', b')

    Action() = default;
    Action(FiniteMagma base, int xs, int zero)
        : B(std::move(base)),
          x_size(xs),
          zero_x(zero),
          phi(static_cast<std::size_t>(xs) * B.size * xs * B.size, 0) {}

    int at(int x, int b, int x2, int b2) const {
        return phi[((static_cast<std::size_t>(x) * B.size + b) * x_size + x2) * B.size + b2];
    }
    int& slot(int x, int b, int x2, int b2) {
        return phi[((static_cast<std::size_t>(x) * B.size + b) * x_size + x2) * B.size + b2];
    }
    // phi00(x, b) = phi(x, 0, 0, b)
    int phi00(int x, int b) const { return at(x, B.unit, zero_x, b); }

    bool operator==(const Action& other) const = default;
};

namespace detail {

inline void require_action_shape(const Action& a, const char* who) {
    require_magma_shape(a.B, who);
    if (a.x_size < 1) throw std::invalid_argument(std::string(who) + ": x_size must be positive");
    if (a.zero_x < 0 || a.zero_x >= a.x_size)
        throw std::invalid_argument(std::string(who) + ": zero index out of range");
    if (a.phi.size() !=
        static_cast<std::size_t>(a.x_size) * a.B.size * a.x_size * a.B.size)
        throw std::invalid_argument(std::string(who) + ": phi table dimensions do not match");
    for (int v : a.phi)
        if (v < 0 || v >= a.x_size)
            throw std::invalid_argument(std::string(who) + ": phi entry out of range");
}

}  // namespace detail

// Exhaustive check of the four action axioms.
// Witnesses: act1 {x}, act2 {x,b}, act3 {b,b'},
// act4 {x,b,x',b', lhs, rhs, phi00(x,b), phi00(x',b'), inner, b+b'} so a
// failing four-argument identity can be replayed by hand.
inline ValidationReport verify_action(const Action& a) {
    detail::require_action_shape(a, "verify_action");
    ValidationReport report;
    const int u = a.B.unit, z = a.zero_x;
    for (int x = 0; x < a.x_size; ++x) {
        if (a.at(x, u, z, u) != x) report.add("act1", {x});
        else if (a.at(z, u, x, u) != x) report.add("act1", {x});
    }
    for (int x = 0; x < a.x_size; ++x)
        for (int b = 0; b < a.B.size; ++b) {
            int v1 = a.at(x, b, z, u), v2 = a.at(x, u, z, b), v3 = a.at(z, u, x, b);
            if (v1 != v2 || v2 != v3) report.add("act2", {x, b});
        }
    for (int b = 0; b < a.B.size; ++b)
        for (int b2 = 0; b2 < a.B.size; ++b2)
            if (a.at(z, b, z, b2) != z) report.add("act3", {b, b2});
    for (int x = 0; x < a.x_size; ++x)
        for (int b = 0; b < a.B.size; ++b)
            for (int x2 = 0; x2 < a.x_size; ++x2)
                for (int b2 = 0; b2 < a.B.size; ++b2) {
                    int t = a.phi00(x, b);
                    int t2 = a.phi00(x2, b2);
                    int sum = a.B.op(b, b2);
                    int inner = a.at(t, b, t2, b2);
                    int lhs = a.at(x, b, x2, b2);
                    int rhs = a.phi00(inner, sum);
                    if (lhs != rhs) report.add("act4", {x, b, x2, b2, lhs, rhs, t, t2, inner, sum});
                }
    return report;
}

inline bool is_valid_action(const Action& a) { return verify_action(a).valid(); }

// The magma structure on X induced by an action: x + x' = phi(x,0,x',0)
// with zero_x as the unit.
inline FiniteMagma action_x_magma(const Action& a) {
    detail::require_action_shape(a, "action_x_magma");
    FiniteMagma x(a.x_size, a.zero_x);
    for (int i = 0; i < a.x_size; ++i)
        for (int j = 0; j < a.x_size; ++j) x.at(i, j) = a.at(i, a.B.unit, j, a.B.unit);
    return x;
}

// Admissible pairs {(x, b) : phi(x,0,0,b) = x} in lexicographic order,
// carrying the magma (x,b) + (x',b') = (phi(x,b,x',b'), b+b').
struct SemidirectProduct {
    Action action;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> index;  // x*|B|+b -> pair index, or -1
    FiniteMagma magma;       // size = pairs.size(), unit = position of (0,0)

    int index_of(int x, int b) const { return index[static_cast<std::size_t>(x) * action.B.size + b]; }
    bool admissible(int x, int b) const { return index_of(x, b) >= 0; }
};

inline SemidirectProduct semidirect_product(const Action& a) {
    if (!is_valid_action(a))
        throw std::invalid_argument("semidirect_product: the action does not satisfy act1-act4");
    SemidirectProduct sdp;
    sdp.action = a;
    sdp.index.assign(static_cast<std::size_t>(a.x_size) * a.B.size, -1);
    for (int x = 0; x < a.x_size; ++x)
        for (int b = 0; b < a.B.size; ++b)
            if (a.phi00(x, b) == x) {
                sdp.index[static_cast<std::size_t>(x) * a.B.size + b] =
                    static_cast<int>(sdp.pairs.size());
                sdp.pairs.emplace_back(x, b);
            }
    const int n = static_cast<int>(sdp.pairs.size());
    sdp.magma = FiniteMagma(n, sdp.index_of(a.zero_x, a.B.unit));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [x, b] = sdp.pairs[static_cast<std::size_t>(i)];
            auto [x2, b2] = sdp.pairs[static_cast<std::size_t>(j)];
            int rx = a.at(x, b, x2, b2);
            int rb = a.B.op(b, b2);
            int r = sdp.index_of(rx, rb);
            if (r < 0)
                throw std::logic_error("semidirect_product: admissible pairs not closed");
            sdp.magma.at(i, j) = r;
        }
    return sdp;
}

// The canonical point of an action: carrier X x| B, kernel maps the pair
// coordinates.  Always a valid retraction point.
inline RetractionPoint canonical_point(const Action& a) {
    SemidirectProduct sdp = semidirect_product(a);
    RetractionPoint pt;
    pt.x_size = a.x_size;
    pt.B = a.B;
    pt.k = ElementMap(a.x_size, sdp.magma.size);
    for (int x = 0; x < a.x_size; ++x)
        pt.k.values[static_cast<std::size_t>(x)] = sdp.index_of(x, a.B.unit);
    pt.s = ElementMap(a.B.size, sdp.magma.size);
    for (int b = 0; b < a.B.size; ++b)
        pt.s.values[static_cast<std::size_t>(b)] = sdp.index_of(a.zero_x, b);
    pt.q = ElementMap(sdp.magma.size, a.x_size);
    pt.p = ElementMap(sdp.magma.size, a.B.size);
    for (std::size_t i = 0; i < sdp.pairs.size(); ++i) {
        pt.q.values[i] = sdp.pairs[i].first;
        pt.p.values[i] = sdp.pairs[i].second;
    }
    pt.A = std::move(sdp.magma);
    return pt;
}

// Is f: X -> X' equivariant, i.e. phi'(f(x), b, f(x'), b') =
// f(phi(x, b, x', b')) for all arguments?  Witness: compat {x,b,x',b'}.
// Precondition (throw): both actions over the same B, f(0) = 0.
inline ValidationReport b_morphism_check(const Action& a, const Action& a2, const ElementMap& f) {
    detail::require_action_shape(a, "b_morphism_check");
    detail::require_action_shape(a2, "b_morphism_check");
    if (!(a.B == a2.B))
        throw std::invalid_argument("b_morphism_check: the actions must share their base magma");
    detail::require_map_shape(f, a.x_size, a2.x_size, "b_morphism_check");
    if (f(a.zero_x) != a2.zero_x)
        throw std::invalid_argument("b_morphism_check: f must send zero to zero");
    ValidationReport report;
    for (int x = 0; x < a.x_size; ++x)
        for (int b = 0; b < a.B.size; ++b)
            for (int x2 = 0; x2 < a.x_size; ++x2)
                for (int b2 = 0; b2 < a.B.size; ++b2)
                    if (a2.at(f(x), b, f(x2), b2) != f(a.at(x, b, x2, b2)))
                        report.add("compat", {x, b, x2, b2});
    return report;
}

inline bool is_b_morphism(const Action& a, const Action& a2, const ElementMap& f) {
    return b_morphism_check(a, a2, f).valid();
}

// Lifts a B-morphism f to the semidirect products via (x, b) -> (f(x), b).
// The result is checked to be a magma morphism before returning.
inline ElementMap induced_sdp_morphism(const Action& a, const Action& a2, const ElementMap& f) {
    if (!is_b_morphism(a, a2, f))
        throw std::invalid_argument("induced_sdp_morphism: f is not a B-morphism");
    SemidirectProduct sdp = semidirect_product(a);
    SemidirectProduct sdp2 = semidirect_product(a2);
    ElementMap g(sdp.magma.size, sdp2.magma.size);
    for (std::size_t i = 0; i < sdp.pairs.size(); ++i) {
        auto [x, b] = sdp.pairs[i];
        int j = sdp2.index_of(f(x), b);
        if (j < 0)
            throw std::logic_error("induced_sdp_morphism: image pair is not admissible");
        g.values[i] = j;
    }
    if (!is_morphism(g, sdp.magma, sdp2.magma))
        throw std::logic_error("induced_sdp_morphism: induced pair map is not a morphism");
    return g;
}

// The unique candidate w(x, b) = u(x) + v(b) out of X x| B.  It is a
// morphism exactly when u(phi(x,b,x',b')) + v(b+b') =
// (u(x)+v(b)) + (u(x')+v(b')) over the admissible pairs.
// Witness: compat {x,b,x',b'}.  Preconditions (throw): u a morphism for
// the induced structure on X, v a morphism B -> Z.
inline MorphismResult hom_out_sdp(const Action& a, const ElementMap& u, const ElementMap& v,
                                  const FiniteMagma& Z) {
    detail::require_action_shape(a, "hom_out_sdp");
    detail::require_magma_shape(Z, "hom_out_sdp");
    detail::require_map_shape(u, a.x_size, Z.size, "hom_out_sdp");
    detail::require_map_shape(v, a.B.size, Z.size, "hom_out_sdp");
    if (!is_morphism(u, action_x_magma(a), Z))
        throw std::invalid_argument("hom_out_sdp: u must be a morphism on the induced X structure");
    if (!is_morphism(v, a.B, Z))
        throw std::invalid_argument("hom_out_sdp: v must be a morphism B -> Z");
    SemidirectProduct sdp = semidirect_product(a);
    MorphismResult result;
    for (auto [x, b] : sdp.pairs)
        for (auto [x2, b2] : sdp.pairs) {
            int lhs = Z.op(u(a.at(x, b, x2, b2)), v(a.B.op(b, b2)));
            int rhs = Z.op(Z.op(u(x), v(b)), Z.op(u(x2), v(b2)));
            if (lhs != rhs) {
                result.report.add("compat", {x, b, x2, b2});
                return result;
            }
        }
    ElementMap w(sdp.magma.size, Z.size);
    for (std::size_t i = 0; i < sdp.pairs.size(); ++i)
        w.values[i] = Z.op(u(sdp.pairs[i].first), v(sdp.pairs[i].second));
    result.map = std::move(w);
    return result;
}

struct IntoSdpResult {
    std::optional<ElementMap> map;  // Z -> pair indices of X x| B
    ValidationReport report;
    // True when phi(x,b,x',b') = x + xi(b,x') with xi(b,x') = phi(0,b,x',0),
    // in which case the compatibility equation is the classical crossed
    // homomorphism condition f(z+z') = f(z) + xi(g(z), f(z')).
    bool crossed_form = false;

    bool present() const { return map.has_value(); }
};

// The candidate z -> (f(z), g(z)) into X x| B.  Image pairs must be
// admissible (failures reported with witness {z}); the candidate is a
// morphism exactly when f(z+z') = phi(f(z), g(z), f(z'), g(z')).
// Witness: compat {z, z'}.  Preconditions (throw): g a morphism,
// f(unit) = 0.
inline IntoSdpResult hom_into_sdp(const Action& a, const ElementMap& f, const ElementMap& g,
                                  const FiniteMagma& Z) {
    detail::require_action_shape(a, "hom_into_sdp");
    detail::require_magma_shape(Z, "hom_into_sdp");
    detail::require_map_shape(f, Z.size, a.x_size, "hom_into_sdp");
    detail::require_map_shape(g, Z.size, a.B.size, "hom_into_sdp");
    if (!is_morphism(g, Z, a.B))
        throw std::invalid_argument("hom_into_sdp: g must be a morphism Z -> B");
    if (f(Z.unit) != a.zero_x)
        throw std::invalid_argument("hom_into_sdp: f must send the unit of Z to zero");

    IntoSdpResult result;
    result.crossed_form = true;
    const FiniteMagma x_magma = action_x_magma(a);
    for (int x = 0; x < a.x_size && result.crossed_form; ++x)
        for (int b = 0; b < a.B.size && result.crossed_form; ++b)
            for (int x2 = 0; x2 < a.x_size && result.crossed_form; ++x2)
                for (int b2 = 0; b2 < a.B.size; ++b2) {
                    int xi = a.at(a.zero_x, b, x2, a.B.unit);
                    if (a.at(x, b, x2, b2) != x_magma.op(x, xi)) {
                        result.crossed_form = false;
                        break;
                    }
                }

    SemidirectProduct sdp = semidirect_product(a);
    for (int z = 0; z < Z.size; ++z)
        if (!sdp.admissible(f(z), g(z))) {
            result.report.add("admissible", {z});
            return result;
        }
    for (int z = 0; z < Z.size; ++z)
        for (int z2 = 0; z2 < Z.size; ++z2)
            if (f(Z.op(z, z2)) != a.at(f(z), g(z), f(z2), g(z2))) {
                result.report.add("compat", {z, z2});
                return result;
            }
    // g(z+z') = g(z) + g(z') already holds, so the pair map is a morphism.
    ElementMap h(Z.size, sdp.magma.size);
    for (int z = 0; z < Z.size; ++z)
        h.values[static_cast<std::size_t>(z)] = sdp.index_of(f(z), g(z));
    result.map = std::move(h);
    return result;
}

// Report for transporting a morphism f of induced X structures to the
// semidirect products.  Conditions 1a-1d are equivalent, as are 2a and 2b;
// both equivalences are exposed so they can be asserted exhaustively.
struct TransportReport {
    bool cond_1a = false;  // morphism g with pi_B g = pi_B and the boundary maps
    bool cond_1b = false;  // morphism g with the boundary maps only
    bool cond_1c = false;  // g1(x,b) = phi'00(f(x),b) satisfies the transport equation
    bool cond_1d = false;  // the four-argument identity on f over all arguments
    bool cond_2a = false;  // morphism g additionally compatible with the X projections
    bool cond_2b = false;  // f is a B-morphism
    bool f_bijective = false;
    bool iso_verified = false;               // set when 2b holds and f is bijective
    std::optional<ElementMap> g;             // the transported morphism, when 1b holds
    std::optional<std::vector<int>> witness; // first failure of 1d, for diagnosis

    bool item1_consistent() const {
        return cond_1a == cond_1b && cond_1b == cond_1c && cond_1c == cond_1d;
    }
    bool item2_consistent() const { return cond_2a == cond_2b; }
};

// Evaluates, independently of one another, the four transport conditions
// for f, the projection-compatible variant, and the isomorphism transport
// for bijective B-morphisms.  Precondition (throw): f is a morphism
// between the induced X structures.
inline TransportReport f_transport_check(const Action& a, const Action& a2, const ElementMap& f) {
    detail::require_action_shape(a, "f_transport_check");
    detail::require_action_shape(a2, "f_transport_check");
    if (!(a.B == a2.B))
        throw std::invalid_argument("f_transport_check: the actions must share their base magma");
    detail::require_map_shape(f, a.x_size, a2.x_size, "f_transport_check");
    if (!is_morphism(f, action_x_magma(a), action_x_magma(a2)))
        throw std::invalid_argument(
            "f_transport_check: f must be a morphism of the induced X structures");

    TransportReport rep;
    const int u = a.B.unit;

    // 1d: phi'00(f(phi(x,b,x',b')), b+b') = phi'(phi'00(f(x),b), b, phi'00(f(x'),b'), b')
    rep.cond_1d = true;
    for (int x = 0; x < a.x_size && rep.cond_1d; ++x)
        for (int b = 0; b < a.B.size && rep.cond_1d; ++b)
            for (int x2 = 0; x2 < a.x_size && rep.cond_1d; ++x2)
                for (int b2 = 0; b2 < a.B.size; ++b2) {
                    int lhs = a2.phi00(f(a.at(x, b, x2, b2)), a.B.op(b, b2));
                    int rhs = a2.at(a2.phi00(f(x), b), b, a2.phi00(f(x2), b2), b2);
                    if (lhs != rhs) {
                        rep.cond_1d = false;
                        rep.witness = std::vector<int>{x, b, x2, b2, lhs, rhs};
                        break;
                    }
                }

    SemidirectProduct sdp = semidirect_product(a);
    SemidirectProduct sdp2 = semidirect_product(a2);

    // 1c: the directly constructed g1(x,b) = phi'00(f(x),b) transports the
    // operation on admissible pairs.
    rep.cond_1c = true;
    for (auto [x, b] : sdp.pairs) {
        if (a2.phi00(f(x), u) != f(x)) rep.cond_1c = false;  // g1(x,0) = f(x)
    }
    for (auto [x, b] : sdp.pairs)
        for (auto [x2, b2] : sdp.pairs) {
            if (!rep.cond_1c) break;
            int lhs = a2.phi00(f(a.at(x, b, x2, b2)), a.B.op(b, b2));
            int rhs = a2.at(a2.phi00(f(x), b), b, a2.phi00(f(x2), b2), b2);
            if (lhs != rhs) rep.cond_1c = false;
        }

    // 1b: the candidate g(x,b) = (phi'00(f(x),b), b) is a well defined
    // morphism with g(x,0) = (f(x),0) and g(0,b) = (0,b).
    auto build_candidate = [&]() -> std::optional<ElementMap> {
        ElementMap g(sdp.magma.size, sdp2.magma.size);
        for (std::size_t i = 0; i < sdp.pairs.size(); ++i) {
            auto [x, b] = sdp.pairs[i];
            int gx = a2.phi00(f(x), b);
            int j = sdp2.index_of(gx, b);
            if (j < 0) return std::nullopt;
            g.values[i] = j;
        }
        if (!is_morphism(g, sdp.magma, sdp2.magma)) return std::nullopt;
        for (int x = 0; x < a.x_size; ++x)
            if (g(sdp.index_of(x, u)) != sdp2.index_of(f(x), u)) return std::nullopt;
        for (int b = 0; b < a.B.size; ++b)
            if (g(sdp.index_of(a.zero_x, b)) != sdp2.index_of(a2.zero_x, b)) return std::nullopt;
        return g;
    };
    std::optional<ElementMap> g = build_candidate();
    rep.cond_1b = g.has_value();
    if (g) rep.g = *g;

    // 1a: additionally pi_B g = pi_B; forced by the shape of the candidate.
    rep.cond_1a = false;
    if (g) {
        rep.cond_1a = true;
        for (std::size_t i = 0; i < sdp.pairs.size(); ++i)
            if (sdp2.pairs[static_cast<std::size_t>((*g)(static_cast<int>(i)))].second !=
                sdp.pairs[i].second) {
                rep.cond_1a = false;
                break;
            }
    }

    // 2a: g exists and is compatible with the X projections.
    rep.cond_2a = false;
    if (g) {
        rep.cond_2a = true;
        for (std::size_t i = 0; i < sdp.pairs.size(); ++i)
            if (sdp2.pairs[static_cast<std::size_t>((*g)(static_cast<int>(i)))].first !=
                f(sdp.pairs[i].first)) {
                rep.cond_2a = false;
                break;
            }
    }

    // 2b: f is a B-morphism.
    rep.cond_2b = is_b_morphism(a, a2, f);

    rep.f_bijective = true;
    std::vector<char> hit(static_cast<std::size_t>(a2.x_size), 0);
    for (int x = 0; x < a.x_size; ++x) hit[static_cast<std::size_t>(f(x))] = 1;
    if (a.x_size != a2.x_size) rep.f_bijective = false;
    for (char h : hit)
        if (!h) rep.f_bijective = false;

    if (rep.cond_2b && rep.f_bijective && g) {
        // The transported morphism must itself be an isomorphism.
        rep.iso_verified = true;
        std::vector<char> img(static_cast<std::size_t>(sdp2.magma.size), 0);
        for (int i = 0; i < sdp.magma.size; ++i) img[static_cast<std::size_t>((*g)(i))] = 1;
        if (sdp.magma.size != sdp2.magma.size) rep.iso_verified = false;
        for (char h : img)
            if (!h) rep.iso_verified = false;
    }
    return rep;
}

}  // namespace magmakit
