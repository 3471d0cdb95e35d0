#pragma once

// Classification of retraction points by actions: the action a point
// induces, the decision procedure for point equivalence, deterministic
// enumeration of actions and points at desk scale, and the quotient of a
// point set by the induced-action relation.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

#include "magmakit/action.hpp"
#include "magmakit/magma.hpp"
#include "magmakit/point.hpp"

namespace magmakit {

// The classifying action of a point:
// phi(x,b,x',b') = q((k(x)+s(b)) + (k(x')+s(b'))), zero = q(0).
// Precondition (throw): the point is valid.  The output always satisfies
// act1-act4.
inline Action phi_of_point(const RetractionPoint& pt) {
    if (!is_valid_point(pt))
        throw std::invalid_argument("phi_of_point: the input is not a valid retraction point");
    Action a(pt.B, pt.x_size, pt.q(pt.A.unit));
    for (int x = 0; x < pt.x_size; ++x)
        for (int b = 0; b < pt.B.size; ++b) {
            const int left = pt.A.op(pt.k(x), pt.s(b));
            for (int x2 = 0; x2 < pt.x_size; ++x2)
                for (int b2 = 0; b2 < pt.B.size; ++b2)
                    a.slot(x, b, x2, b2) =
                        pt.q(pt.A.op(left, pt.A.op(pt.k(x2), pt.s(b2))));
        }
    return a;
}

// Decides pt ~ pt2 through their classifying actions.  When the actions
// agree the connecting morphism alpha(a) = k'(q(a)) + s'(p(a)) is built,
// checked (compatible with k, s, q and a morphism), and returned; when
// they differ there is no compatible morphism and nullopt is returned.
// Preconditions (throw): both points valid, same x_size and base magma.
inline std::optional<ElementMap> equivalent_points(const RetractionPoint& pt,
                                                   const RetractionPoint& pt2) {
    if (pt.x_size != pt2.x_size || !(pt.B == pt2.B))
        throw std::invalid_argument("equivalent_points: the points must share their ends");
    Action a = phi_of_point(pt);
    Action a2 = phi_of_point(pt2);
    if (!(a == a2)) return std::nullopt;
    ElementMap alpha(pt.A.size, pt2.A.size);
    for (int v = 0; v < pt.A.size; ++v)
        alpha.values[static_cast<std::size_t>(v)] =
            pt2.A.op(pt2.k(pt.q(v)), pt2.s(pt.p(v)));
    SsflResult check = ssfl_transport(pt, pt2, alpha);
    if (!check.verified())
        throw std::logic_error("equivalent_points: constructed alpha failed verification");
    return alpha;
}

namespace detail {

// Everything constant across candidates while enumerating the actions over
// a fixed (x_size, B): zero is pinned at 0, phi00 determines the admissible
// pairs, and each remaining block cell either has a forced value or ranges
// over the fixpoints of phi00(-, b+b').
struct ActionEnumFrame {
    int x_size;
    const FiniteMagma* B;
    std::vector<int> phi00;                       // x*|B|+b
    std::vector<std::pair<int, int>> admissible;  // lexicographic
    std::vector<int> pair_index;                  // x*|B|+b -> index or -1
    std::vector<int> row_index;                   // x*|B|+b -> index of (phi00(x,b), b)
    std::vector<int> block;                       // |S|^2 values
    struct FreeCell {
        int block_pos;
        std::vector<int> domain;  // ascending
    };
    std::vector<FreeCell> free_cells;

    int p00(int x, int b) const { return phi00[static_cast<std::size_t>(x) * B->size + b]; }
};

// Prepares the frame for one phi00 table.  Returns false when phi00 is not
// self-consistent (phi00(phi00(x,b), b) must equal phi00(x,b)).
inline bool build_action_frame(ActionEnumFrame& fr) {
    const FiniteMagma& B = *fr.B;
    const int X = fr.x_size, u = B.unit;
    for (int x = 0; x < X; ++x)
        for (int b = 0; b < B.size; ++b)
            if (fr.p00(fr.p00(x, b), b) != fr.p00(x, b)) return false;

    fr.admissible.clear();
    fr.pair_index.assign(static_cast<std::size_t>(X) * B.size, -1);
    for (int x = 0; x < X; ++x)
        for (int b = 0; b < B.size; ++b)
            if (fr.p00(x, b) == x) {
                fr.pair_index[static_cast<std::size_t>(x) * B.size + b] =
                    static_cast<int>(fr.admissible.size());
                fr.admissible.emplace_back(x, b);
            }
    fr.row_index.assign(static_cast<std::size_t>(X) * B.size, -1);
    for (int x = 0; x < X; ++x)
        for (int b = 0; b < B.size; ++b)
            fr.row_index[static_cast<std::size_t>(x) * B.size + b] =
                fr.pair_index[static_cast<std::size_t>(fr.p00(x, b)) * B.size + b];

    const int S = static_cast<int>(fr.admissible.size());
    fr.block.assign(static_cast<std::size_t>(S) * S, 0);
    fr.free_cells.clear();
    for (int i = 0; i < S; ++i)
        for (int j = 0; j < S; ++j) {
            auto [x, b] = fr.admissible[static_cast<std::size_t>(i)];
            auto [x2, b2] = fr.admissible[static_cast<std::size_t>(j)];
            int pos = i * S + j;
            if (x == 0 && b == u) {
                fr.block[static_cast<std::size_t>(pos)] = x2;
            } else if (x2 == 0 && b2 == u) {
                fr.block[static_cast<std::size_t>(pos)] = x;
            } else if (x == 0 && x2 == 0) {
                fr.block[static_cast<std::size_t>(pos)] = 0;
            } else if (b == u && x2 == 0) {
                fr.block[static_cast<std::size_t>(pos)] = fr.p00(x, b2);
            } else {
                ActionEnumFrame::FreeCell cell;
                cell.block_pos = pos;
                int c = B.op(b, b2);
                for (int v = 0; v < X; ++v)
                    if (fr.p00(v, c) == v) cell.domain.push_back(v);
                fr.free_cells.push_back(std::move(cell));
            }
        }
    return true;
}

template <class Fn>
void scan_phi00(int x_size, const FiniteMagma& B, Fn&& per_phi00) {
    ActionEnumFrame fr;
    fr.x_size = x_size;
    fr.B = &B;
    fr.phi00.assign(static_cast<std::size_t>(x_size) * B.size, 0);
    for (int x = 0; x < x_size; ++x)
        for (int b = 0; b < B.size; ++b)
            fr.phi00[static_cast<std::size_t>(x) * B.size + b] = (b == B.unit) ? x : 0;
    std::vector<std::size_t> slots;  // free phi00 cells in table order
    for (int x = 1; x < x_size; ++x)
        for (int b = 0; b < B.size; ++b)
            if (b != B.unit) slots.push_back(static_cast<std::size_t>(x) * B.size + b);
    std::vector<int> cur(slots.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < slots.size(); ++i) fr.phi00[slots[i]] = cur[i];
        per_phi00(fr);
        if (slots.empty()) break;
        std::size_t pos = slots.size();
        while (pos > 0 && cur[pos - 1] == x_size - 1) cur[--pos] = 0;
        if (pos == 0) break;
        ++cur[pos - 1];
    }
}

}  // namespace detail

// Number of action tables the pruned enumeration will emit candidates for
// (which is exactly the number of valid actions, since the pruning is
// lossless).  Saturates at UINT64_MAX.
inline std::uint64_t action_count_estimate(int x_size, const FiniteMagma& B) {
    detail::require_magma_shape(B, "action_count_estimate");
    if (x_size < 1) throw std::invalid_argument("action_count_estimate: x_size must be positive");
    std::uint64_t total = 0;
    detail::scan_phi00(x_size, B, [&](detail::ActionEnumFrame& fr) {
        if (!detail::build_action_frame(fr)) return;
        std::uint64_t n = 1;
        for (const auto& cell : fr.free_cells) {
            std::uint64_t d = cell.domain.size();
            if (d != 0 && n > UINT64_MAX / d) {
                n = UINT64_MAX;
                break;
            }
            n *= d;
        }
        if (UINT64_MAX - total < n) total = UINT64_MAX;
        else total += n;
    });
    return total;
}

// Streams every valid action with zero fixed at index 0 over the given
// base magma.  The Action handed to fn is a reused buffer.  For x_size <= 2
// (and for trivial B) the stream is in lexicographic order of the flat phi
// table; enumerate_actions sorts unconditionally.
template <class Fn>
void for_each_action(int x_size, const FiniteMagma& B, Fn&& fn) {
    detail::require_magma_shape(B, "for_each_action");
    if (x_size < 1) throw std::invalid_argument("for_each_action: x_size must be positive");
    Action act(B, x_size, 0);
    detail::scan_phi00(x_size, B, [&](detail::ActionEnumFrame& fr) {
        if (!detail::build_action_frame(fr)) return;
        for (const auto& cell : fr.free_cells)
            if (cell.domain.empty()) return;  // cannot happen: 0 is always a fixpoint
        const int S = static_cast<int>(fr.admissible.size());
        std::vector<std::size_t> choice(fr.free_cells.size(), 0);
        for (;;) {
            for (std::size_t i = 0; i < fr.free_cells.size(); ++i)
                fr.block[static_cast<std::size_t>(fr.free_cells[i].block_pos)] =
                    fr.free_cells[i].domain[choice[i]];
            // Reconstruct the full table: phi(x,b,x',b') is the block value
            // at the admissible pair row (phi00(x,b), b), (phi00(x',b'), b').
            int* out = act.phi.data();
            for (int x = 0; x < x_size; ++x)
                for (int b = 0; b < B.size; ++b) {
                    const int r = fr.row_index[static_cast<std::size_t>(x) * B.size + b];
                    const int* brow = fr.block.data() + static_cast<std::size_t>(r) * S;
                    for (int x2 = 0; x2 < x_size; ++x2)
                        for (int b2 = 0; b2 < B.size; ++b2)
                            *out++ = brow[fr.row_index[static_cast<std::size_t>(x2) * B.size + b2]];
                }
            fn(static_cast<const Action&>(act));
            std::size_t pos = fr.free_cells.size();
            while (pos > 0 && choice[pos - 1] + 1 == fr.free_cells[pos - 1].domain.size())
                choice[--pos] = 0;
            if (pos == 0) break;
            ++choice[pos - 1];
        }
    });
}

inline std::vector<Action> enumerate_actions(int x_size, const FiniteMagma& B,
                                             std::uint64_t max_candidates = kDefaultMaxCandidates) {
    std::uint64_t count = action_count_estimate(x_size, B);
    if (count > max_candidates) {
        std::uint64_t raw = pow_u64_saturating(
            static_cast<std::uint64_t>(x_size),
            static_cast<std::uint64_t>(x_size) * x_size * B.size * B.size);
        throw SearchLimitError(
            "enumerate_actions: " + std::to_string(count) + " valid tables (raw space " +
                std::to_string(raw) + ") exceed the candidate budget of " +
                std::to_string(max_candidates),
            count);
    }
    std::vector<Action> out;
    out.reserve(static_cast<std::size_t>(count));
    for_each_action(x_size, B, [&](const Action& a) { out.push_back(a); });
    std::sort(out.begin(), out.end(),
              [](const Action& a, const Action& b) { return a.phi < b.phi; });
    return out;
}

// Streams every valid retraction point with carrier {0..n-1}, n <= max_A,
// in a canonical labeling: the carrier unit is index 0 and the kernel zero
// q(0) is index 0.  Order: carrier size ascending, then carrier table
// order, then lexicographic (k, q, s, p).
template <class Fn>
void for_each_point(int x_size, const FiniteMagma& B, int max_A, Fn&& fn) {
    detail::require_magma_shape(B, "for_each_point");
    if (x_size < 1) throw std::invalid_argument("for_each_point: x_size must be positive");
    if (max_A < 1) throw std::invalid_argument("for_each_point: max_A must be positive");

    for (int n = 1; n <= max_A; ++n) {
        if (n < x_size || n < B.size) continue;  // k injective, p surjective
        for_each_magma(n, [&](const FiniteMagma& A) {
            std::vector<RetractionPoint> found;
            // Sections and retractions of the base: s and p morphisms with ps = 1.
            std::vector<ElementMap> sections = enumerate_morphisms(B, A);
            std::vector<ElementMap> retractions = enumerate_morphisms(A, B);
            for (const ElementMap& p : retractions)
                for (const ElementMap& s : sections) {
                    bool split = true;
                    for (int b = 0; b < B.size; ++b)
                        if (p(s(b)) != b) {
                            split = false;
                            break;
                        }
                    if (!split) continue;
                    // Kernel maps: k(0) = 0 and k injective into p^{-1}(unit).
                    std::vector<int> kernel_elems;
                    for (int a = 0; a < A.size; ++a)
                        if (p(a) == B.unit && a != A.unit) kernel_elems.push_back(a);
                    std::vector<int> pick(static_cast<std::size_t>(x_size) - 1, 0);
                    std::vector<int> kvals(static_cast<std::size_t>(x_size), 0);
                    const int kc = static_cast<int>(kernel_elems.size());
                    if (x_size - 1 > kc) continue;
                    // Recursive enumeration of injective kernel tuples.
                    std::vector<char> used(static_cast<std::size_t>(A.size), 0);
                    auto rec_k = [&](auto&& self, int depth) -> void {
                        if (depth == x_size - 1) {
                            kvals[0] = A.unit;
                            for (int x = 1; x < x_size; ++x)
                                kvals[static_cast<std::size_t>(x)] = pick[static_cast<std::size_t>(x) - 1];
                            ElementMap k(x_size, A.size, kvals);
                            // q is forced on im(k) and im(s); elsewhere it
                            // ranges over the solutions of k(x) + s(p(a)) = a.
                            std::vector<int> qbase(static_cast<std::size_t>(A.size), -1);
                            for (int x = 0; x < x_size; ++x) qbase[static_cast<std::size_t>(k(x))] = x;
                            bool consistent = true;
                            for (int b = 0; b < B.size; ++b) {
                                int a = s(b);
                                if (qbase[static_cast<std::size_t>(a)] == -1)
                                    qbase[static_cast<std::size_t>(a)] = 0;
                                else if (qbase[static_cast<std::size_t>(a)] != 0 && b != B.unit) {
                                    consistent = false;
                                    break;
                                }
                            }
                            if (!consistent) return;
                            std::vector<int> free_slots;
                            std::vector<std::vector<int>> free_sols;
                            for (int a = 0; a < A.size; ++a) {
                                if (qbase[static_cast<std::size_t>(a)] != -1) {
                                    // Forced value must still satisfy the decomposition.
                                    int x = qbase[static_cast<std::size_t>(a)];
                                    if (A.op(k(x), s(p(a))) != a) {
                                        consistent = false;
                                        break;
                                    }
                                    continue;
                                }
                                std::vector<int> sols;
                                for (int x = 0; x < x_size; ++x)
                                    if (A.op(k(x), s(p(a))) == a) sols.push_back(x);
                                if (sols.empty()) {
                                    consistent = false;
                                    break;
                                }
                                free_slots.push_back(a);
                                free_sols.push_back(std::move(sols));
                            }
                            if (!consistent) return;
                            std::vector<std::size_t> choice(free_slots.size(), 0);
                            for (;;) {
                                ElementMap q(A.size, x_size);
                                for (int a = 0; a < A.size; ++a)
                                    q.values[static_cast<std::size_t>(a)] =
                                        qbase[static_cast<std::size_t>(a)];
                                for (std::size_t i = 0; i < free_slots.size(); ++i)
                                    q.values[static_cast<std::size_t>(free_slots[i])] =
                                        free_sols[i][choice[i]];
                                RetractionPoint pt{A, B, x_size, k, q, s, p};
                                if (verify_point(pt).valid()) found.push_back(std::move(pt));
                                std::size_t pos = free_slots.size();
                                while (pos > 0 && choice[pos - 1] + 1 == free_sols[pos - 1].size())
                                    choice[--pos] = 0;
                                if (pos == 0) break;
                                ++choice[pos - 1];
                            }
                            return;
                        }
                        for (int i = 0; i < kc; ++i) {
                            int a = kernel_elems[static_cast<std::size_t>(i)];
                            if (used[static_cast<std::size_t>(a)]) continue;
                            used[static_cast<std::size_t>(a)] = 1;
                            pick[static_cast<std::size_t>(depth)] = a;
                            self(self, depth + 1);
                            used[static_cast<std::size_t>(a)] = 0;
                        }
                    };
                    rec_k(rec_k, 0);
                }
            std::sort(found.begin(), found.end(),
                      [](const RetractionPoint& lhs, const RetractionPoint& rhs) {
                          auto key = [](const RetractionPoint& pt) {
                              return std::tie(pt.k.values, pt.q.values, pt.s.values, pt.p.values);
                          };
                          return key(lhs) < key(rhs);
                      });
            for (RetractionPoint& pt : found) fn(static_cast<const RetractionPoint&>(pt));
        });
    }
}

inline std::vector<RetractionPoint> enumerate_points(
    int x_size, const FiniteMagma& B, int max_A,
    std::uint64_t max_candidates = kDefaultMaxCandidates) {
    if (max_A < 1) throw std::invalid_argument("enumerate_points: max_A must be positive");
    std::uint64_t work = 0;
    for (int n = 1; n <= max_A; ++n) {
        std::uint64_t c = magma_count(n);
        work = (UINT64_MAX - work < c) ? UINT64_MAX : work + c;
    }
    if (work > max_candidates)
        throw SearchLimitError("enumerate_points: scanning " + std::to_string(work) +
                                   " carrier tables up to size " + std::to_string(max_A) +
                                   " exceeds the candidate budget of " +
                                   std::to_string(max_candidates),
                               work);
    std::vector<RetractionPoint> out;
    for_each_point(x_size, B, max_A, [&](const RetractionPoint& pt) { out.push_back(pt); });
    return out;
}

struct EquivalenceClass {
    Action action;                  // the shared classifying action
    RetractionPoint representative; // canonical_point(action)
    std::vector<int> members;       // indices into the input point list
};

// Groups points by their classifying action (exact table equality).
// Classes are listed in order of first appearance.  Precondition (throw):
// all points share x_size and base magma.
inline std::vector<EquivalenceClass> quotient_points(const std::vector<RetractionPoint>& points) {
    std::vector<EquivalenceClass> classes;
    if (points.empty()) return classes;
    for (const RetractionPoint& pt : points)
        if (pt.x_size != points.front().x_size || !(pt.B == points.front().B))
            throw std::invalid_argument("quotient_points: the points must share their ends");
    std::map<std::pair<int, std::vector<int>>, std::size_t> by_action;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Action a = phi_of_point(points[i]);
        auto key = std::make_pair(a.zero_x, a.phi);
        auto it = by_action.find(key);
        if (it == by_action.end()) {
            by_action.emplace(std::move(key), classes.size());
            EquivalenceClass cls;
            cls.representative = canonical_point(a);
            cls.action = std::move(a);
            cls.members = {static_cast<int>(i)};
            classes.push_back(std::move(cls));
        } else {
            classes[it->second].members.push_back(static_cast<int>(i));
        }
    }
    return classes;
}

}  // namespace magmakit
