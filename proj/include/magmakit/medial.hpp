#pragma once

// The order construction over a medial unitary magma B: the sub-carrier
// A = {(x, b) : x = u + b for some u} of B x B is closed under the
// componentwise operation, and every choice function q with q(b,b) = 0,
// q(x,0) = x and q(x,b) a solution of u + b = x makes (A, k, q, s, p) a
// retraction point from B to B.  Different choices can classify
// differently, so all of them are returned.

#include <utility>
#include <vector>

#include "magmakit/classify.hpp"
#include "magmakit/magma.hpp"
#include "magmakit/point.hpp"

namespace magmakit {

struct MedialOrderResult {
    FiniteMagma carrier;                        // the sub-magma on the order pairs
    std::vector<std::pair<int, int>> elements;  // (x, b) per carrier index
    ValidationReport closure;                   // products leaving the carrier, if any
    std::vector<RetractionPoint> points;        // one per valid choice function
    // Per point: mismatches between the classifying action and the
    // subtraction formula ((u+u') + (b+b')) - (b+b'), where "-" is the
    // point's own choice function.  Witness: {u, b, u', b'}.
    std::vector<ValidationReport> formula_reports;
    std::uint64_t choice_count = 0;  // number of choice functions scanned
};

inline MedialOrderResult medial_order_point(const FiniteMagma& B,
                                            std::uint64_t max_choices = 10000) {
    detail::require_magma_shape(B, "medial_order_point");
    if (!classify_properties(B).medial)
        throw std::invalid_argument("medial_order_point: the base magma must be medial");

    MedialOrderResult result;
    const int n = B.size;
    std::vector<int> index(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < n; ++b) {
            bool reachable = false;
            for (int u = 0; u < n && !reachable; ++u) reachable = B.op(u, b) == x;
            if (reachable) {
                index[static_cast<std::size_t>(x) * n + b] =
                    static_cast<int>(result.elements.size());
                result.elements.emplace_back(x, b);
            }
        }
    const int m = static_cast<int>(result.elements.size());
    result.carrier = FiniteMagma(m, index[static_cast<std::size_t>(B.unit) * n + B.unit]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto [x, b] = result.elements[static_cast<std::size_t>(i)];
            auto [x2, b2] = result.elements[static_cast<std::size_t>(j)];
            int rx = B.op(x, x2), rb = B.op(b, b2);
            int r = index[static_cast<std::size_t>(rx) * n + rb];
            if (r < 0) {
                result.closure.add("closed", {x, b, x2, b2});
                return result;
            }
            result.carrier.at(i, j) = r;
        }

    // q slots: forced on the diagonal and the zero column, free over the
    // solution set elsewhere.
    std::vector<int> qbase(static_cast<std::size_t>(m), -1);
    std::vector<int> free_slots;
    std::vector<std::vector<int>> free_sols;
    std::uint64_t combos = 1;
    for (int i = 0; i < m; ++i) {
        auto [x, b] = result.elements[static_cast<std::size_t>(i)];
        if (x == b) {
            qbase[static_cast<std::size_t>(i)] = B.unit;
        } else if (b == B.unit) {
            qbase[static_cast<std::size_t>(i)] = x;
        } else {
            std::vector<int> sols;
            for (int u = 0; u < n; ++u)
                if (B.op(u, b) == x) sols.push_back(u);
            combos *= static_cast<std::uint64_t>(sols.size());
            free_slots.push_back(i);
            free_sols.push_back(std::move(sols));
            if (combos > max_choices)
                throw SearchLimitError("medial_order_point: " + std::to_string(combos) +
                                           "+ choice functions exceed the budget of " +
                                           std::to_string(max_choices),
                                       combos);
        }
    }
    result.choice_count = combos;

    ElementMap k(n, m), s(n, m), p(m, n);
    for (int x = 0; x < n; ++x) {
        k.values[static_cast<std::size_t>(x)] = index[static_cast<std::size_t>(x) * n + B.unit];
        s.values[static_cast<std::size_t>(x)] = index[static_cast<std::size_t>(x) * n + x];
    }
    for (int i = 0; i < m; ++i)
        p.values[static_cast<std::size_t>(i)] = result.elements[static_cast<std::size_t>(i)].second;

    std::vector<std::size_t> choice(free_slots.size(), 0);
    for (;;) {
        ElementMap q(m, n);
        for (int i = 0; i < m; ++i) q.values[static_cast<std::size_t>(i)] = qbase[static_cast<std::size_t>(i)];
        for (std::size_t i = 0; i < free_slots.size(); ++i)
            q.values[static_cast<std::size_t>(free_slots[i])] = free_sols[i][choice[i]];
        RetractionPoint pt{result.carrier, B, n, k, q, s, p};
        if (verify_point(pt).valid()) {
            // The classifying action against the subtraction formula.
            Action a = phi_of_point(pt);
            ValidationReport formula;
            for (int u = 0; u < n; ++u)
                for (int b = 0; b < n; ++b)
                    for (int u2 = 0; u2 < n; ++u2)
                        for (int b2 = 0; b2 < n; ++b2) {
                            int top = B.op(B.op(u, u2), B.op(b, b2));
                            int idx = index[static_cast<std::size_t>(top) * n + B.op(b, b2)];
                            if (idx < 0 || a.at(u, b, u2, b2) != q(idx))
                                formula.add("phi-formula", {u, b, u2, b2});
                        }
            result.points.push_back(std::move(pt));
            result.formula_reports.push_back(std::move(formula));
        }
        std::size_t pos = free_slots.size();
        while (pos > 0 && choice[pos - 1] + 1 == free_sols[pos - 1].size()) choice[--pos] = 0;
        if (pos == 0) break;
        ++choice[pos - 1];
    }
    return result;
}

// True when the solution of u + b = x is unique for the given (x, b); on
// such arguments every choice function agrees with the subtraction formula.
inline bool medial_difference_unique(const FiniteMagma& B, int x, int b) {
    int count = 0;
    for (int u = 0; u < B.size; ++u)
        if (B.op(u, b) == x) ++count;
    return count == 1;
}

}  // namespace magmakit
