#pragma once

// Shared fixtures and independent oracles for the test suites.  Everything
// here is deliberately brute force: these routines exist to cross-check
// the library, so they must not share code paths with it.

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "magmakit/action.hpp"
#include "magmakit/classify.hpp"
#include "magmakit/magma.hpp"
#include "magmakit/point.hpp"

namespace testsupport {

using namespace magmakit;

// The two unitary magmas of order 2 (unit 0): Z2 and the idempotent one.
inline FiniteMagma z2() { return cyclic_magma(2); }

inline FiniteMagma order2_idempotent() {
    FiniteMagma m(2, 0);
    m.install_unit_laws();
    m.at(1, 1) = 1;
    return m;
}

// Symmetric group on three letters via composition of one-line
// permutations, listed lexicographically; the identity sits at index 0.
inline FiniteMagma s3_table() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p = {0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    FiniteMagma m(6, 0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> comp;
            for (int t = 0; t < 3; ++t) comp[static_cast<std::size_t>(t)] =
                perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                    perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)])];
            m.at(i, j) =
                static_cast<int>(std::find(perms.begin(), perms.end(), comp) - perms.begin());
        }
    return m;
}

// The Z3 x| Z2 inversion action: phi(x,b,x',b') = x + (-1)^b x' mod 3.
inline Action inversion_action() {
    Action a(cyclic_magma(2), 3, 0);
    for (int x = 0; x < 3; ++x)
        for (int b = 0; b < 2; ++b)
            for (int x2 = 0; x2 < 3; ++x2)
                for (int b2 = 0; b2 < 2; ++b2)
                    a.slot(x, b, x2, b2) = (x + (b == 0 ? x2 : (3 - x2) % 3)) % 3;
    return a;
}

// The componentwise product action of X on itself over B:
// phi(x,b,x',b') = x + x'.
inline Action product_action(const FiniteMagma& x, const FiniteMagma& b) {
    Action a(b, x.size, x.unit);
    for (int i = 0; i < x.size; ++i)
        for (int bi = 0; bi < b.size; ++bi)
            for (int j = 0; j < x.size; ++j)
                for (int bj = 0; bj < b.size; ++bj) a.slot(i, bi, j, bj) = x.op(i, j);
    return a;
}

// A finite analog of the Riemann-sphere point: carrier adjoin_poles(X),
// base the three-element pole magma adjoin_poles(trivial), p collapsing X
// to the unit, s picking the poles, q collapsing the poles to the unit
// of X.  Valid for every unitary magma X.
inline RetractionPoint adjoin_poles_point(const FiniteMagma& x) {
    RetractionPoint pt;
    pt.A = adjoin_poles(x);
    pt.B = adjoin_poles(trivial_magma());
    pt.x_size = x.size;
    const int zero_a = x.size, inf_a = x.size + 1;  // poles in A
    const int unit_b = 0, zero_b = 1, inf_b = 2;    // base indices
    pt.k = ElementMap(x.size, pt.A.size);
    for (int i = 0; i < x.size; ++i) pt.k.values[static_cast<std::size_t>(i)] = i;
    pt.q = ElementMap(pt.A.size, x.size);
    for (int i = 0; i < x.size; ++i) pt.q.values[static_cast<std::size_t>(i)] = i;
    pt.q.values[static_cast<std::size_t>(zero_a)] = x.unit;
    pt.q.values[static_cast<std::size_t>(inf_a)] = x.unit;
    pt.s = ElementMap(3, pt.A.size);
    pt.s.values[static_cast<std::size_t>(unit_b)] = x.unit;
    pt.s.values[static_cast<std::size_t>(zero_b)] = zero_a;
    pt.s.values[static_cast<std::size_t>(inf_b)] = inf_a;
    pt.p = ElementMap(pt.A.size, 3);
    for (int i = 0; i < x.size; ++i) pt.p.values[static_cast<std::size_t>(i)] = unit_b;
    pt.p.values[static_cast<std::size_t>(zero_a)] = zero_b;
    pt.p.values[static_cast<std::size_t>(inf_a)] = inf_b;
    return pt;
}

// The direct-product point A = X x B with the obvious maps.
inline RetractionPoint product_point(const FiniteMagma& x, const FiniteMagma& b) {
    RetractionPoint pt;
    pt.A = direct_product(x, b);
    pt.B = b;
    pt.x_size = x.size;
    pt.k = ElementMap(x.size, pt.A.size);
    for (int i = 0; i < x.size; ++i)
        pt.k.values[static_cast<std::size_t>(i)] = i * b.size + b.unit;
    pt.q = ElementMap(pt.A.size, x.size);
    pt.p = ElementMap(pt.A.size, b.size);
    for (int i = 0; i < x.size; ++i)
        for (int j = 0; j < b.size; ++j) {
            pt.q.values[static_cast<std::size_t>(i * b.size + j)] = i;
            pt.p.values[static_cast<std::size_t>(i * b.size + j)] = j;
        }
    pt.s = ElementMap(b.size, pt.A.size);
    for (int j = 0; j < b.size; ++j)
        pt.s.values[static_cast<std::size_t>(j)] = x.unit * b.size + j;
    return pt;
}

// First (in lexicographic table order) loop of the given order that is not
// associative: rows and columns are permutations, unit at 0.  Backtracking
// over the cells below/right of the unit row and column.
inline std::optional<FiniteMagma> find_nonassociative_loop(int n) {
    FiniteMagma m(n, 0);
    m.install_unit_laws();
    std::vector<std::vector<char>> row_used(static_cast<std::size_t>(n),
                                            std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<std::vector<char>> col_used = row_used;
    for (int i = 1; i < n; ++i) {
        row_used[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;  // m(i,0) = i
        col_used[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;  // m(0,i) = i
    }
    std::optional<FiniteMagma> result;
    auto rec = [&](auto&& self, int cell) -> bool {
        if (cell == (n - 1) * (n - 1)) {
            if (!classify_properties(m).associative) {
                result = m;
                return true;
            }
            return false;
        }
        int i = 1 + cell / (n - 1), j = 1 + cell % (n - 1);
        for (int v = 0; v < n; ++v) {
            if (row_used[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] ||
                col_used[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)])
                continue;
            row_used[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = 1;
            col_used[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = 1;
            m.at(i, j) = v;
            if (self(self, cell + 1)) return true;
            row_used[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = 0;
            col_used[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    rec(rec, 0);
    return result;
}

// The point every magma carries over the trivial base: X = A as a set.
inline RetractionPoint identity_point(const FiniteMagma& a) {
    RetractionPoint pt;
    pt.A = a;
    pt.B = trivial_magma();
    pt.x_size = a.size;
    pt.k = ElementMap::identity(a.size);
    pt.q = ElementMap::identity(a.size);
    pt.s = ElementMap::constant(1, a.size, a.unit);
    pt.p = ElementMap::constant(a.size, 1, 0);
    return pt;
}

// Brute-force equivalence oracle: scans every map A -> A' for one
// compatible with (k, s, q) and a morphism.  Exponential; tiny inputs only.
inline bool exists_alpha_brute_force(const RetractionPoint& pt, const RetractionPoint& pt2) {
    const int n = pt.A.size, n2 = pt2.A.size;
    std::vector<int> vals(static_cast<std::size_t>(n), 0);
    for (;;) {
        ElementMap alpha(n, n2, vals);
        bool ok = alpha(pt.A.unit) == pt2.A.unit;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n; ++b)
                if (alpha(pt.A.op(a, b)) != pt2.A.op(alpha(a), alpha(b))) {
                    ok = false;
                    break;
                }
        for (int x = 0; x < pt.x_size && ok; ++x)
            if (alpha(pt.k(x)) != pt2.k(x)) ok = false;
        for (int b = 0; b < pt.B.size && ok; ++b)
            if (alpha(pt.s(b)) != pt2.s(b)) ok = false;
        for (int a = 0; a < n && ok; ++a)
            if (pt2.q(alpha(a)) != pt.q(a)) ok = false;
        if (ok) return true;
        int pos = n - 1;
        while (pos >= 0 && vals[static_cast<std::size_t>(pos)] == n2 - 1) {
            vals[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return false;
        ++vals[static_cast<std::size_t>(pos)];
    }
}

// Brute-force point enumeration oracle: every (k, q, s, p) tuple over every
// carrier table of size <= max_A, filtered by verify_point and the
// canonical labeling q(0) = 0.  Exponential; tiny inputs only.
inline std::vector<RetractionPoint> enumerate_points_brute_force(int x_size, const FiniteMagma& B,
                                                                 int max_A) {
    std::vector<RetractionPoint> out;
    for (int n = 1; n <= max_A; ++n) {
        for_each_magma(n, [&](const FiniteMagma& A) {
            auto all_maps = [](int dom, int cod) {
                std::vector<ElementMap> maps;
                std::vector<int> vals(static_cast<std::size_t>(dom), 0);
                for (;;) {
                    maps.emplace_back(dom, cod, vals);
                    int pos = dom - 1;
                    while (pos >= 0 && vals[static_cast<std::size_t>(pos)] == cod - 1) {
                        vals[static_cast<std::size_t>(pos)] = 0;
                        --pos;
                    }
                    if (pos < 0) break;
                    ++vals[static_cast<std::size_t>(pos)];
                }
                return maps;
            };
            for (const ElementMap& k : all_maps(x_size, n))
                for (const ElementMap& q : all_maps(n, x_size)) {
                    if (q(A.unit) != 0) continue;
                    for (const ElementMap& s : all_maps(B.size, n))
                        for (const ElementMap& p : all_maps(n, B.size)) {
                            RetractionPoint pt{A, B, x_size, k, q, s, p};
                            if (verify_point(pt).valid()) out.push_back(std::move(pt));
                        }
                }
        });
    }
    return out;
}

}  // namespace testsupport
