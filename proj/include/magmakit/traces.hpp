#pragma once

// Traces of associativity in a retraction point: six bracketing identities
// over the images of k and s, the ladder of simplified formulas for the
// classifying action that each trace combination buys, and the two special
// carrier structures (monoids and left loops) with their stronger
// conclusions.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "magmakit/classify.hpp"
#include "magmakit/point.hpp"

namespace magmakit {

// Each flag is the exhaustive truth of one bracketing identity; the three
// indices of the first failure (in scan order) are kept as a witness.
// "oneks" and "kso" quantify their free slot over all of A.
struct TraceFlags {
    bool kks = false, sks = false, oneks = false, kss = false, ksk = false, kso = false;
    std::optional<std::array<int, 3>> w_kks, w_sks, w_oneks, w_kss, w_ksk, w_kso;
};

inline TraceFlags trace_flags(const RetractionPoint& pt) {
    detail::require_point_shape(pt, "trace_flags");
    const FiniteMagma& A = pt.A;
    const int X = pt.x_size, Bn = pt.B.size, An = A.size;
    auto k = [&](int x) { return pt.k(x); };
    auto s = [&](int b) { return pt.s(b); };
    auto scan = [&](int n1, int n2, int n3, auto&& lhs, auto&& rhs, bool& flag,
                    std::optional<std::array<int, 3>>& witness) {
        flag = true;
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j)
                for (int l = 0; l < n3; ++l)
                    if (lhs(i, j, l) != rhs(i, j, l)) {
                        flag = false;
                        witness = {i, j, l};
                        return;
                    }
    };
    TraceFlags out;
    // k + (k + s) = (k + k) + s
    scan(X, X, Bn,
         [&](int x, int x2, int b) { return A.op(k(x), A.op(k(x2), s(b))); },
         [&](int x, int x2, int b) { return A.op(A.op(k(x), k(x2)), s(b)); },
         out.kks, out.w_kks);
    // s + (k + s) = (s + k) + s
    scan(Bn, X, Bn,
         [&](int b, int x, int b2) { return A.op(s(b), A.op(k(x), s(b2))); },
         [&](int b, int x, int b2) { return A.op(A.op(s(b), k(x)), s(b2)); },
         out.sks, out.w_sks);
    // a + (k + s) = (a + k) + s
    scan(An, X, Bn,
         [&](int a, int x, int b) { return A.op(a, A.op(k(x), s(b))); },
         [&](int a, int x, int b) { return A.op(A.op(a, k(x)), s(b)); },
         out.oneks, out.w_oneks);
    // k + (s + s) = (k + s) + s
    scan(X, Bn, Bn,
         [&](int x, int b, int b2) { return A.op(k(x), A.op(s(b), s(b2))); },
         [&](int x, int b, int b2) { return A.op(A.op(k(x), s(b)), s(b2)); },
         out.kss, out.w_kss);
    // k + (s + k) = (k + s) + k
    scan(X, Bn, X,
         [&](int x, int b, int x2) { return A.op(k(x), A.op(s(b), k(x2))); },
         [&](int x, int b, int x2) { return A.op(A.op(k(x), s(b)), k(x2)); },
         out.ksk, out.w_ksk);
    // k + (s + a) = (k + s) + a
    scan(X, Bn, An,
         [&](int x, int b, int a) { return A.op(k(x), A.op(s(b), a)); },
         [&](int x, int b, int a) { return A.op(A.op(k(x), s(b)), a); },
         out.kso, out.w_kso);
    return out;
}

// One rung of the simplification ladder: whether its trace hypothesis held
// and, if so, whether the simplified formula checked out exhaustively.
struct LadderItem {
    int id = 0;
    std::string name;
    bool hypothesis_met = false;
    bool conclusion_verified = false;  // meaningful only when hypothesis_met
    std::optional<std::vector<int>> witness;
};

struct CaseLadderReport {
    std::vector<LadderItem> items;

    bool sound() const {
        for (const LadderItem& it : items)
            if (it.hypothesis_met && !it.conclusion_verified) return false;
        return true;
    }
};

// Verifies, for every trace combination whose hypothesis holds, the
// corresponding simplified formula for the classifying action.  The
// derived maps are sections of phi:
//   x +_{b'} x' = phi(x,0,x',b')      xi^x(b,x')   = phi(x,b,x',0)
//   xi_{b'}(b,x') = phi(0,b,x',b')    rho^b_{b'}(x) = phi(x,b,0,b')
//   x + x' = phi(x,0,x',0)            xi(b,x') = phi(0,b,x',0)
//   rho_{b'}(x) = phi(x,0,0,b')
inline CaseLadderReport particular_case_check(const RetractionPoint& pt) {
    if (!is_valid_point(pt))
        throw std::invalid_argument("particular_case_check: the input must be a valid point");
    const Action a = phi_of_point(pt);
    const TraceFlags traces = trace_flags(pt);
    const int X = pt.x_size, Bn = pt.B.size;
    const int u = a.B.unit;

    auto plus_b = [&](int x, int x2, int b2) { return a.at(x, u, x2, b2); };
    auto xi_x = [&](int x, int b, int x2) { return a.at(x, b, x2, u); };
    auto xi_b = [&](int b, int x2, int b2) { return a.at(a.zero_x, b, x2, b2); };
    auto rho_bb = [&](int x, int b, int b2) { return a.at(x, b, a.zero_x, b2); };
    auto plus = [&](int x, int x2) { return a.at(x, u, x2, u); };
    auto xi = [&](int b, int x2) { return a.at(a.zero_x, b, x2, u); };
    auto rho = [&](int x, int b2) { return a.at(x, u, a.zero_x, b2); };

    CaseLadderReport report;
    auto add_item = [&](int id, std::string name, bool hyp, auto&& check) {
        LadderItem item;
        item.id = id;
        item.name = std::move(name);
        item.hypothesis_met = hyp;
        if (hyp) {
            item.conclusion_verified = true;
            check(item);
        }
        report.items.push_back(std::move(item));
    };
    auto scan4 = [&](LadderItem& item, auto&& cond) {
        for (int x = 0; x < X; ++x)
            for (int b = 0; b < Bn; ++b)
                for (int x2 = 0; x2 < X; ++x2)
                    for (int b2 = 0; b2 < Bn; ++b2)
                        if (!cond(x, b, x2, b2)) {
                            item.conclusion_verified = false;
                            item.witness = std::vector<int>{x, b, x2, b2};
                            return;
                        }
    };

    add_item(1, "kks", traces.kks, [&](LadderItem& item) {
        scan4(item, [&](int x, int, int x2, int b2) {
            return plus_b(x, x2, b2) == rho(plus(x, x2), b2);
        });
    });
    add_item(2, "sks", traces.sks, [&](LadderItem& item) {
        scan4(item, [&](int x2, int b, int, int b2) {
            return xi_b(b, x2, b2) == rho_bb(xi(b, x2), b, b2);
        });
    });
    add_item(3, "1ks", traces.oneks, [&](LadderItem& item) {
        scan4(item, [&](int x, int b, int x2, int b2) {
            return a.at(x, b, x2, b2) == rho_bb(xi_x(x, b, x2), b, b2);
        });
    });
    add_item(4, "kss", traces.kss, [&](LadderItem& item) {
        scan4(item, [&](int x, int b, int, int b2) {
            return rho_bb(x, b, b2) == rho(x, a.B.op(b, b2));
        });
    });
    add_item(5, "ksk", traces.ksk, [&](LadderItem& item) {
        scan4(item, [&](int x, int b, int x2, int) {
            return xi_x(x, b, x2) == plus_b(x, xi(b, x2), b);
        });
    });
    add_item(6, "ks1", traces.kso, [&](LadderItem& item) {
        scan4(item, [&](int x, int b, int x2, int b2) {
            return a.at(x, b, x2, b2) == plus_b(x, xi_b(b, x2, b2), a.B.op(b, b2));
        });
    });
    add_item(7, "kks+ksk", traces.kks && traces.ksk, [&](LadderItem& item) {
        scan4(item, [&](int x, int b, int x2, int) {
            return xi_x(x, b, x2) == rho(plus(x, xi(b, x2)), b);
        });
    });
    add_item(8, "sks+kss", traces.sks && traces.kss, [&](LadderItem& item) {
        scan4(item, [&](int x2, int b, int, int b2) {
            return xi_b(b, x2, b2) == rho(xi(b, x2), a.B.op(b, b2));
        });
    });
    add_item(9, "1ks+kss+ksk", traces.oneks && traces.kss && traces.ksk, [&](LadderItem& item) {
        scan4(item, [&](int x, int b, int x2, int b2) {
            return a.at(x, b, x2, b2) == rho(plus(x, xi(b, x2)), a.B.op(b, b2));
        });
    });
    add_item(10, "ks1+kks+sks", traces.kso && traces.kks && traces.sks, [&](LadderItem& item) {
        scan4(item, [&](int x, int b, int x2, int b2) {
            return a.at(x, b, x2, b2) == rho(plus(x, xi(b, x2)), a.B.op(b, b2));
        });
    });
    return report;
}

// Report for the two special carrier structures.  A branch that does not
// apply is marked and left empty.
struct SpecialStructureReport {
    bool carrier_associative = false;
    bool carrier_left_loop = false;
    ValidationReport monoid;     // populated when carrier_associative
    ValidationReport left_loop;  // populated when carrier_left_loop
};

// Monoid branch: the induced X and the base are monoids, the pair map
// a -> (q(a), p(a)) is a bijection onto {(x,b) : rho_b(x) = x} inverted by
// (x,b) -> k(x) + s(b), the action factors as rho_{b+b'}(x + xi(b,x')),
// and the point composes with every partner.
// Left-loop branch: rho_b(x) = x everywhere, kq(a) is the unique
// difference a - sp(a), k xi(b,x) = (s(b) + k(x)) - s(b), the action
// satisfies k phi(x,b,x',b') = ((k(x)+s(b)) + (k(x')+s(b'))) - s(b+b'),
// and the pair map is a bijection onto all of X x B.
inline SpecialStructureReport special_structure_check(const RetractionPoint& pt) {
    if (!is_valid_point(pt))
        throw std::invalid_argument("special_structure_check: the input must be a valid point");
    const FiniteMagma& A = pt.A;
    const Action a = phi_of_point(pt);
    const int X = pt.x_size, Bn = pt.B.size, u = a.B.unit;
    auto rho = [&](int x, int b2) { return a.at(x, u, a.zero_x, b2); };
    auto xi = [&](int b, int x2) { return a.at(a.zero_x, b, x2, u); };
    auto plus = [&](int x, int x2) { return a.at(x, u, x2, u); };

    SpecialStructureReport report;
    StructureFlags carrier = classify_properties(A);
    report.carrier_associative = carrier.associative;
    report.carrier_left_loop = carrier.left_loop;

    if (carrier.associative) {
        ValidationReport& r = report.monoid;
        if (!classify_properties(induced_x_magma(pt)).associative) r.add("x-monoid", {});
        if (!classify_properties(pt.B).associative) r.add("b-monoid", {});
        // Pair map: injective, lands in the rho-fixed pairs, and is inverted
        // by (x, b) -> k(x) + s(b) on exactly that set.
        for (int v = 0; v < A.size; ++v) {
            int x = pt.q(v), b = pt.p(v);
            if (rho(x, b) != x) r.add("pair-image", {v});
            if (A.op(pt.k(x), pt.s(b)) != v) r.add("pair-inverse", {v});
        }
        for (int x = 0; x < X; ++x)
            for (int b = 0; b < Bn; ++b) {
                if (rho(x, b) != x) continue;
                int v = A.op(pt.k(x), pt.s(b));
                if (pt.q(v) != x || pt.p(v) != b) r.add("pair-onto", {x, b});
            }
        for (int x = 0; x < X; ++x)
            for (int b = 0; b < Bn; ++b)
                for (int x2 = 0; x2 < X; ++x2)
                    for (int b2 = 0; b2 < Bn; ++b2)
                        if (a.at(x, b, x2, b2) != rho(plus(x, xi(b, x2)), a.B.op(b, b2)))
                            r.add("phi-formula", {x, b, x2, b2});
        if (!stably_composable(pt)) r.add("stable-composition", {});
    }

    if (carrier.left_loop) {
        ValidationReport& r = report.left_loop;
        // a - c: the unique w with w + c = a.
        auto difference = [&](int lhs, int c) {
            for (int w = 0; w < A.size; ++w)
                if (A.op(w, c) == lhs) return w;
            return -1;
        };
        for (int x = 0; x < X; ++x)
            for (int b = 0; b < Bn; ++b)
                if (rho(x, b) != x) r.add("rho-identity", {x, b});
        for (int v = 0; v < A.size; ++v)
            if (A.op(pt.k(pt.q(v)), pt.s(pt.p(v))) != v ||
                pt.k(pt.q(v)) != difference(v, pt.s(pt.p(v))))
                r.add("kq-difference", {v});
        for (int b = 0; b < Bn; ++b)
            for (int x = 0; x < X; ++x)
                if (pt.k(xi(b, x)) != difference(A.op(pt.s(b), pt.k(x)), pt.s(b)))
                    r.add("xi-conjugation", {b, x});
        for (int x = 0; x < X; ++x)
            for (int b = 0; b < Bn; ++b)
                for (int x2 = 0; x2 < X; ++x2)
                    for (int b2 = 0; b2 < Bn; ++b2) {
                        int lhs = pt.k(a.at(x, b, x2, b2));
                        int sum = A.op(A.op(pt.k(x), pt.s(b)), A.op(pt.k(x2), pt.s(b2)));
                        if (lhs != difference(sum, pt.s(a.B.op(b, b2))))
                            r.add("phi-difference", {x, b, x2, b2});
                    }
        // Pair map bijective onto all of X x B.
        if (A.size != X * Bn) r.add("pair-bijection", {A.size, X * Bn});
        std::vector<char> seen(static_cast<std::size_t>(X) * Bn, 0);
        for (int v = 0; v < A.size; ++v) {
            std::size_t slot = static_cast<std::size_t>(pt.q(v)) * Bn + pt.p(v);
            if (seen[slot]) r.add("pair-bijection", {v});
            seen[slot] = 1;
        }
    }
    return report;
}

}  // namespace magmakit
