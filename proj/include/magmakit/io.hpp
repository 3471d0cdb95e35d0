#pragma once

// JSON documents for the library types.  Documents are self-describing via
// their "kind" field, field order is fixed, unknown fields are rejected,
// and every index is validated on load so downstream operations can trust
// the shapes.

#include <string>
#include <vector>

#include <json.hpp>

#include "magmakit/action.hpp"
#include "magmakit/classify.hpp"
#include "magmakit/magma.hpp"
#include "magmakit/point.hpp"

namespace magmakit {

using json = nlohmann::ordered_json;

class DocumentError : public std::runtime_error {
public:
    explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require_keys(const json& doc, std::initializer_list<const char*> keys,
                         const char* kind) {
    if (!doc.is_object()) throw DocumentError(std::string(kind) + ": expected an object");
    for (const char* key : keys)
        if (!doc.contains(key))
            throw DocumentError(std::string(kind) + ": missing field \"" + key + "\"");
    for (const auto& item : doc.items()) {
        bool known = false;
        for (const char* key : keys) known = known || item.key() == key;
        if (!known)
            throw DocumentError(std::string(kind) + ": unknown field \"" + item.key() + "\"");
    }
}

inline void require_kind(const json& doc, const char* kind) {
    if (!doc.contains("kind") || !doc["kind"].is_string() || doc["kind"] != kind)
        throw DocumentError(std::string("expected a \"") + kind + "\" document");
}

inline int read_size(const json& value, const char* what) {
    if (!value.is_number_integer() || value.get<long long>() < 1 ||
        value.get<long long>() > 1'000'000)
        throw DocumentError(std::string(what) + ": expected a positive size");
    return value.get<int>();
}

inline std::vector<int> read_index_array(const json& value, std::size_t expected, int bound,
                                         const char* what) {
    if (!value.is_array() || value.size() != expected)
        throw DocumentError(std::string(what) + ": expected an array of length " +
                            std::to_string(expected));
    std::vector<int> out;
    out.reserve(expected);
    for (const json& v : value) {
        if (!v.is_number_integer())
            throw DocumentError(std::string(what) + ": entries must be integers");
        long long n = v.get<long long>();
        if (n < 0 || n >= bound)
            throw DocumentError(std::string(what) + ": index " + std::to_string(n) +
                                " out of range [0, " + std::to_string(bound) + ")");
        out.push_back(static_cast<int>(n));
    }
    return out;
}

}  // namespace detail

inline json magma_to_json(const FiniteMagma& m) {
    json table = json::array();
    for (int a = 0; a < m.size; ++a) {
        json row = json::array();
        for (int b = 0; b < m.size; ++b) row.push_back(m.op(a, b));
        table.push_back(std::move(row));
    }
    return json{{"kind", "magma"}, {"size", m.size}, {"unit", m.unit}, {"table", std::move(table)}};
}

inline FiniteMagma magma_from_json(const json& doc) {
    detail::require_kind(doc, "magma");
    detail::require_keys(doc, {"kind", "size", "unit", "table"}, "magma");
    FiniteMagma m;
    m.size = detail::read_size(doc["size"], "magma.size");
    if (!doc["unit"].is_number_integer() || doc["unit"].get<long long>() < 0 ||
        doc["unit"].get<long long>() >= m.size)
        throw DocumentError("magma.unit: index out of range");
    m.unit = doc["unit"].get<int>();
    if (!doc["table"].is_array() || doc["table"].size() != static_cast<std::size_t>(m.size))
        throw DocumentError("magma.table: expected " + std::to_string(m.size) + " rows");
    m.table.reserve(static_cast<std::size_t>(m.size) * m.size);
    for (const json& row : doc["table"]) {
        std::vector<int> r = detail::read_index_array(row, static_cast<std::size_t>(m.size),
                                                      m.size, "magma.table row");
        m.table.insert(m.table.end(), r.begin(), r.end());
    }
    return m;
}

inline json map_to_json(const ElementMap& f) {
    return json{{"kind", "map"}, {"dom", f.dom_size}, {"cod", f.cod_size}, {"values", f.values}};
}

inline ElementMap map_from_json(const json& doc) {
    detail::require_kind(doc, "map");
    detail::require_keys(doc, {"kind", "dom", "cod", "values"}, "map");
    ElementMap f;
    f.dom_size = detail::read_size(doc["dom"], "map.dom");
    f.cod_size = detail::read_size(doc["cod"], "map.cod");
    f.values = detail::read_index_array(doc["values"], static_cast<std::size_t>(f.dom_size),
                                        f.cod_size, "map.values");
    return f;
}

inline json point_to_json(const RetractionPoint& pt) {
    return json{{"kind", "point"},   {"A", magma_to_json(pt.A)}, {"B", magma_to_json(pt.B)},
                {"x_size", pt.x_size}, {"k", pt.k.values},       {"q", pt.q.values},
                {"s", pt.s.values},   {"p", pt.p.values}};
}

inline RetractionPoint point_from_json(const json& doc) {
    detail::require_kind(doc, "point");
    detail::require_keys(doc, {"kind", "A", "B", "x_size", "k", "q", "s", "p"}, "point");
    RetractionPoint pt;
    pt.A = magma_from_json(doc["A"]);
    pt.B = magma_from_json(doc["B"]);
    pt.x_size = detail::read_size(doc["x_size"], "point.x_size");
    pt.k = ElementMap(pt.x_size, pt.A.size,
                      detail::read_index_array(doc["k"], static_cast<std::size_t>(pt.x_size),
                                               pt.A.size, "point.k"));
    pt.q = ElementMap(pt.A.size, pt.x_size,
                      detail::read_index_array(doc["q"], static_cast<std::size_t>(pt.A.size),
                                               pt.x_size, "point.q"));
    pt.s = ElementMap(pt.B.size, pt.A.size,
                      detail::read_index_array(doc["s"], static_cast<std::size_t>(pt.B.size),
                                               pt.A.size, "point.s"));
    pt.p = ElementMap(pt.A.size, pt.B.size,
                      detail::read_index_array(doc["p"], static_cast<std::size_t>(pt.A.size),
                                               pt.B.size, "point.p"));
    return pt;
}

inline json action_to_json(const Action& a) {
    return json{{"kind", "action"},
                {"B", magma_to_json(a.B)},
                {"x_size", a.x_size},
                {"zero", a.zero_x},
                {"phi", a.phi}};
}

inline Action action_from_json(const json& doc) {
    detail::require_kind(doc, "action");
    detail::require_keys(doc, {"kind", "B", "x_size", "zero", "phi"}, "action");
    Action a;
    a.B = magma_from_json(doc["B"]);
    a.x_size = detail::read_size(doc["x_size"], "action.x_size");
    if (!doc["zero"].is_number_integer() || doc["zero"].get<long long>() < 0 ||
        doc["zero"].get<long long>() >= a.x_size)
        throw DocumentError("action.zero: index out of range");
    a.zero_x = doc["zero"].get<int>();
    std::size_t cells = static_cast<std::size_t>(a.x_size) * a.B.size * a.x_size * a.B.size;
    a.phi = detail::read_index_array(doc["phi"], cells, a.x_size, "action.phi");
    return a;
}

inline json report_to_json(const ValidationReport& report) {
    json violations = json::array();
    for (const Violation& v : report.violations)
        violations.push_back(json{{"axiom", v.axiom}, {"witness", v.witness}});
    return json{{"kind", "report"}, {"valid", report.valid()}, {"violations", std::move(violations)}};
}

}  // namespace magmakit
