#pragma once

// Finite unitary magmas: carriers with a two-sided unit and a dense
// operation table, plus maps between carriers, axiom checking, structural
// predicates and the basic constructions (products, pole adjunction,
// exhaustive table enumeration, isomorphism search).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magmakit {

// One failed law: an axiom identifier plus the indices that witness the
// failure.  Witness layouts are documented at each checking operation.
struct Violation {
    std::string axiom;
    std::vector<int> witness;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    void add(std::string axiom, std::vector<int> witness) {
        violations.push_back(Violation{std::move(axiom), std::move(witness)});
    }
};

// Thrown when an enumeration would exceed its configured candidate budget.
// The message carries the size estimate so callers can decide to raise it.
class SearchLimitError : public std::runtime_error {
public:
    SearchLimitError(const std::string& what, std::uint64_t estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    std::uint64_t estimate() const { return estimate_; }

private:
    std::uint64_t estimate_;
};

inline constexpr std::uint64_t kDefaultMaxCandidates = 100'000'000;

// A finite unitary magma.  Elements are the indices 0..size-1, the unit is
// stored explicitly (it is not forced to index 0; several constructions
// place it elsewhere), and the table is row-major with the row index as
// the left operand.
struct FiniteMagma {
    int size = 0;
    int unit = 0;
    std::vector<int> table;  // size*size entries, table[a*size + b] = a + b

    FiniteMagma() = default;
    FiniteMagma(int n, int u) : size(n), unit(u), table(static_cast<std::size_t>(n) * n, 0) {}

    int op(int a, int b) const { return table[static_cast<std::size_t>(a) * size + b]; }
    int& at(int a, int b) { return table[static_cast<std::size_t>(a) * size + b]; }

    // Installs the unit row and column; other entries are left untouched.
    void install_unit_laws() {
        for (int i = 0; i < size; ++i) {
            at(unit, i) = i;
            at(i, unit) = i;
        }
    }

    bool operator==(const FiniteMagma& other) const = default;
};

// The one-element magma.
inline FiniteMagma trivial_magma() {
    FiniteMagma m(1, 0);
    return m;
}

// Cyclic group Z_n with unit 0.
inline FiniteMagma cyclic_magma(int n) {
    FiniteMagma m(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m.at(a, b) = (a + b) % n;
    return m;
}

// A function between finite carriers, stored as an index sequence.
struct ElementMap {
    int dom_size = 0;
    int cod_size = 0;
    std::vector<int> values;

    ElementMap() = default;
    ElementMap(int dom, int cod) : dom_size(dom), cod_size(cod), values(dom, 0) {}
    ElementMap(int dom, int cod, std::vector<int> vals)
        : dom_size(dom), cod_size(cod), values(std::move(vals)) {}

    int operator()(int i) const { return values[static_cast<std::size_t>(i)]; }

    static ElementMap identity(int n) {
        ElementMap f(n, n);
        for (int i = 0; i < n; ++i) f.values[i] = i;
        return f;
    }
    static ElementMap constant(int dom, int cod, int value) {
        ElementMap f(dom, cod);
        std::fill(f.values.begin(), f.values.end(), value);
        return f;
    }

    bool operator==(const ElementMap& other) const = default;
};

// g after f (first f, then g).
inline ElementMap compose(const ElementMap& g, const ElementMap& f) {
    if (f.cod_size != g.dom_size)
        throw std::invalid_argument("compose: codomain/domain sizes do not match");
    ElementMap h(f.dom_size, g.cod_size);
    for (int i = 0; i < f.dom_size; ++i) h.values[i] = g(f(i));
    return h;
}

namespace detail {

inline void require_magma_shape(const FiniteMagma& m, const char* who) {
    if (m.size <= 0) throw std::invalid_argument(std::string(who) + ": carrier must be nonempty");
    if (m.unit < 0 || m.unit >= m.size)
        throw std::invalid_argument(std::string(who) + ": unit index out of range");
    if (m.table.size() != static_cast<std::size_t>(m.size) * m.size)
        throw std::invalid_argument(std::string(who) + ": table dimensions do not match size");
}

inline void require_map_shape(const ElementMap& f, int dom, int cod, const char* who) {
    if (f.dom_size != dom || f.cod_size != cod)
        throw std::invalid_argument(std::string(who) + ": map endpoints do not match");
    if (f.values.size() != static_cast<std::size_t>(f.dom_size))
        throw std::invalid_argument(std::string(who) + ": value sequence length mismatch");
    for (int v : f.values)
        if (v < 0 || v >= cod)
            throw std::invalid_argument(std::string(who) + ": map value out of range");
}

}  // namespace detail

// Checks the unit laws (and entry ranges) of a candidate table.
// Witnesses: entry-range -> {row, col, value}; left-unit/right-unit -> {i, got}.
// Malformed dimensions are a structural error, not an axiom failure.
inline ValidationReport verify_unitary_magma(const FiniteMagma& m) {
    detail::require_magma_shape(m, "verify_unitary_magma");
    ValidationReport report;
    for (int a = 0; a < m.size; ++a)
        for (int b = 0; b < m.size; ++b) {
            int v = m.op(a, b);
            if (v < 0 || v >= m.size) report.add("entry-range", {a, b, v});
        }
    for (int i = 0; i < m.size; ++i) {
        if (m.op(m.unit, i) != i) report.add("left-unit", {i, m.op(m.unit, i)});
        if (m.op(i, m.unit) != i) report.add("right-unit", {i, m.op(i, m.unit)});
    }
    return report;
}

// Is f a morphism of unitary magmas m1 -> m2?
// Witnesses: unit -> {f(unit), expected}; compat -> {a, b}.
inline ValidationReport check_morphism(const ElementMap& f, const FiniteMagma& m1,
                                       const FiniteMagma& m2) {
    detail::require_magma_shape(m1, "check_morphism");
    detail::require_magma_shape(m2, "check_morphism");
    detail::require_map_shape(f, m1.size, m2.size, "check_morphism");
    ValidationReport report;
    if (f(m1.unit) != m2.unit) report.add("unit", {f(m1.unit), m2.unit});
    for (int a = 0; a < m1.size; ++a)
        for (int b = 0; b < m1.size; ++b)
            if (f(m1.op(a, b)) != m2.op(f(a), f(b))) report.add("compat", {a, b});
    return report;
}

inline bool is_morphism(const ElementMap& f, const FiniteMagma& m1, const FiniteMagma& m2) {
    return check_morphism(f, m1, m2).valid();
}

struct StructureFlags {
    bool associative = false;
    bool left_loop = false;  // every right translation u -> u+b is a bijection
    bool medial = false;     // (x+y)+(z+w) = (x+z)+(y+w)
    bool commutative = false;
};

inline StructureFlags classify_properties(const FiniteMagma& m) {
    detail::require_magma_shape(m, "classify_properties");
    StructureFlags flags;
    flags.associative = true;
    for (int a = 0; a < m.size && flags.associative; ++a)
        for (int b = 0; b < m.size && flags.associative; ++b)
            for (int c = 0; c < m.size; ++c)
                if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c))) {
                    flags.associative = false;
                    break;
                }
    flags.left_loop = true;
    std::vector<char> seen(static_cast<std::size_t>(m.size));
    for (int b = 0; b < m.size && flags.left_loop; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int u = 0; u < m.size; ++u) seen[static_cast<std::size_t>(m.op(u, b))] = 1;
        for (char s : seen)
            if (!s) {
                flags.left_loop = false;
                break;
            }
    }
    flags.medial = true;
    for (int x = 0; x < m.size && flags.medial; ++x)
        for (int y = 0; y < m.size && flags.medial; ++y)
            for (int z = 0; z < m.size && flags.medial; ++z)
                for (int w = 0; w < m.size; ++w)
                    if (m.op(m.op(x, y), m.op(z, w)) != m.op(m.op(x, z), m.op(y, w))) {
                        flags.medial = false;
                        break;
                    }
    flags.commutative = true;
    for (int a = 0; a < m.size && flags.commutative; ++a)
        for (int b = 0; b < m.size; ++b)
            if (m.op(a, b) != m.op(b, a)) {
                flags.commutative = false;
                break;
            }
    return flags;
}

// Componentwise product on pairs encoded as i*m2.size + j.
inline FiniteMagma direct_product(const FiniteMagma& m1, const FiniteMagma& m2) {
    detail::require_magma_shape(m1, "direct_product");
    detail::require_magma_shape(m2, "direct_product");
    FiniteMagma prod(m1.size * m2.size, m1.unit * m2.size + m2.unit);
    for (int a1 = 0; a1 < m1.size; ++a1)
        for (int a2 = 0; a2 < m2.size; ++a2)
            for (int b1 = 0; b1 < m1.size; ++b1)
                for (int b2 = 0; b2 < m2.size; ++b2)
                    prod.at(a1 * m2.size + a2, b1 * m2.size + b2) =
                        m1.op(a1, b1) * m2.size + m2.op(a2, b2);
    return prod;
}

// Adjoins an absorbing-ish pair {0, inf} to a unitary magma (X, ., 1):
// products inside X are unchanged, 0 and inf absorb X from both sides,
// 0.0 = 0, inf.inf = inf, and the two poles multiply to the unit of X.
// The new elements sit at indices size (the "zero" pole) and size+1
// ("infinity"); the unit stays the unit of X.
inline FiniteMagma adjoin_poles(const FiniteMagma& x) {
    detail::require_magma_shape(x, "adjoin_poles");
    const int n = x.size;
    const int zero = n, inf = n + 1;
    FiniteMagma m(n + 2, x.unit);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m.at(a, b) = x.op(a, b);
    for (int a = 0; a < n; ++a) {
        m.at(a, zero) = zero;
        m.at(zero, a) = zero;
        m.at(a, inf) = inf;
        m.at(inf, a) = inf;
    }
    m.at(zero, zero) = zero;
    m.at(inf, inf) = inf;
    m.at(zero, inf) = x.unit;
    m.at(inf, zero) = x.unit;
    return m;
}

inline std::uint64_t pow_u64_saturating(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

// Number of operation tables of size n with the unit fixed at index 0.
inline std::uint64_t magma_count(int n) {
    if (n < 1) throw std::invalid_argument("magma_count: size must be at least 1");
    std::uint64_t free_cells = static_cast<std::uint64_t>(n - 1) * static_cast<std::uint64_t>(n - 1);
    return pow_u64_saturating(static_cast<std::uint64_t>(n), free_cells);
}

// Streams every operation table of size n with the unit fixed at index 0,
// in lexicographic order of the (n-1)^2 free entries.  The magma passed to
// fn is a reused buffer; copy it if it must outlive the callback.
template <class Fn>
void for_each_magma(int n, Fn&& fn) {
    if (n < 1) throw std::invalid_argument("for_each_magma: size must be at least 1");
    FiniteMagma m(n, 0);
    m.install_unit_laws();
    if (n == 1) {
        fn(static_cast<const FiniteMagma&>(m));
        return;
    }
    const int k = (n - 1) * (n - 1);
    std::vector<int> cells(static_cast<std::size_t>(k));  // flattened (i,j), i,j >= 1
    for (;;) {
        for (int idx = 0; idx < k; ++idx)
            m.at(1 + idx / (n - 1), 1 + idx % (n - 1)) = cells[static_cast<std::size_t>(idx)];
        fn(static_cast<const FiniteMagma&>(m));
        int pos = k - 1;
        while (pos >= 0 && cells[static_cast<std::size_t>(pos)] == n - 1) {
            cells[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++cells[static_cast<std::size_t>(pos)];
    }
}

inline std::vector<FiniteMagma> enumerate_magmas(
    int n, std::uint64_t max_candidates = kDefaultMaxCandidates) {
    std::uint64_t count = magma_count(n);
    if (count > max_candidates)
        throw SearchLimitError("enumerate_magmas: " + std::to_string(count) +
                                   " tables of size " + std::to_string(n) +
                                   " exceed the candidate budget of " +
                                   std::to_string(max_candidates),
                               count);
    std::vector<FiniteMagma> out;
    out.reserve(static_cast<std::size_t>(count));
    for_each_magma(n, [&](const FiniteMagma& m) { out.push_back(m); });
    return out;
}

// Searches for a unit-preserving bijective morphism m1 -> m2.  Candidates
// are scanned in lexicographic order of the value sequence, so the first
// witness found is deterministic.
inline std::optional<ElementMap> find_isomorphism(const FiniteMagma& m1, const FiniteMagma& m2) {
    detail::require_magma_shape(m1, "find_isomorphism");
    detail::require_magma_shape(m2, "find_isomorphism");
    if (m1.size != m2.size) return std::nullopt;
    const int n = m1.size;
    std::vector<int> targets;
    targets.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < n; ++i)
        if (i != m2.unit) targets.push_back(i);
    std::vector<int> dom;
    dom.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < n; ++i)
        if (i != m1.unit) dom.push_back(i);
    ElementMap f(n, n);
    do {
        f.values[static_cast<std::size_t>(m1.unit)] = m2.unit;
        for (std::size_t i = 0; i < dom.size(); ++i)
            f.values[static_cast<std::size_t>(dom[i])] = targets[i];
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n; ++b)
                if (f(m1.op(a, b)) != m2.op(f(a), f(b))) {
                    ok = false;
                    break;
                }
        if (ok) return f;
    } while (std::next_permutation(targets.begin(), targets.end()));
    return std::nullopt;
}

// All morphisms m1 -> m2 in lexicographic order of the value sequence.
inline std::vector<ElementMap> enumerate_morphisms(const FiniteMagma& m1, const FiniteMagma& m2) {
    detail::require_magma_shape(m1, "enumerate_morphisms");
    detail::require_magma_shape(m2, "enumerate_morphisms");
    std::vector<ElementMap> out;
    ElementMap f(m1.size, m2.size);
    // Odometer over all value sequences; the unit slot is pinned.
    std::vector<int> slots;
    for (int i = 0; i < m1.size; ++i)
        if (i != m1.unit) slots.push_back(i);
    f.values[static_cast<std::size_t>(m1.unit)] = m2.unit;
    std::vector<int> cur(slots.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < slots.size(); ++i)
            f.values[static_cast<std::size_t>(slots[i])] = cur[i];
        if (is_morphism(f, m1, m2)) out.push_back(f);
        if (slots.empty()) break;
        std::size_t pos = slots.size();
        while (pos > 0 && cur[pos - 1] == m2.size - 1) cur[--pos] = 0;
        if (pos == 0) break;
        ++cur[pos - 1];
    }
    return out;
}

}  // namespace magmakit
