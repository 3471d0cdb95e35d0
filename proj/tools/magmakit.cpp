// Command-line workbench: verification, construction, classification and
// enumeration over JSON documents.  Exit status 0 means every check was
// valid, 1 means a checked structure failed (with a witness in the
// report), 2 means a usage, I/O or parse problem.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "magmakit/interval.hpp"
#include "magmakit/io.hpp"
#include "magmakit/medial.hpp"
#include "magmakit/sphere.hpp"
#include "magmakit/traces.hpp"

namespace {

using namespace magmakit;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

json load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw DocumentError(path + ": " + e.what());
    }
    return doc;
}

struct Output {
    std::string path;  // empty = stdout

    void emit(const json& doc) const {
        if (path.empty()) {
            std::cout << doc.dump(2) << "\n";
            return;
        }
        std::ofstream out(path);
        if (!out) throw DocumentError("cannot write " + path);
        out << doc.dump(2) << "\n";
    }
};

int emit_report(const Output& out, const ValidationReport& report) {
    out.emit(report_to_json(report));
    return report.valid() ? kExitValid : kExitInvalid;
}

int run_verify(const std::string& path, const Output& out) {
    json doc = load_document(path);
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        throw DocumentError(path + ": missing document kind");
    std::string kind = doc["kind"].get<std::string>();
    if (kind == "magma") return emit_report(out, verify_unitary_magma(magma_from_json(doc)));
    if (kind == "point") return emit_report(out, verify_point(point_from_json(doc)));
    if (kind == "action") return emit_report(out, verify_action(action_from_json(doc)));
    throw DocumentError(path + ": cannot verify documents of kind \"" + kind + "\"");
}

// Loads an action document and insists it is valid, reporting otherwise.
std::optional<Action> load_valid_action(const std::string& path, const Output& out, int& status) {
    Action a = action_from_json(load_document(path));
    ValidationReport report = verify_action(a);
    if (!report.valid()) {
        status = emit_report(out, report);
        return std::nullopt;
    }
    return a;
}

std::optional<RetractionPoint> load_valid_point(const std::string& path, const Output& out,
                                                int& status) {
    RetractionPoint pt = point_from_json(load_document(path));
    ValidationReport report = verify_point(pt);
    if (!report.valid()) {
        status = emit_report(out, report);
        return std::nullopt;
    }
    return pt;
}

int run_build_sdp(const std::string& action_path, const Output& out) {
    int status = kExitUsage;
    auto a = load_valid_action(action_path, out, status);
    if (!a) return status;
    out.emit(magma_to_json(semidirect_product(*a).magma));
    return kExitValid;
}

int run_build_canonical(const std::string& action_path, const Output& out) {
    int status = kExitUsage;
    auto a = load_valid_action(action_path, out, status);
    if (!a) return status;
    out.emit(point_to_json(canonical_point(*a)));
    return kExitValid;
}

int run_build_pullback(const std::string& point_path, const std::string& map_path,
                       const std::string& z_path, const Output& out) {
    int status = kExitUsage;
    auto pt = load_valid_point(point_path, out, status);
    if (!pt) return status;
    ElementMap g = map_from_json(load_document(map_path));
    FiniteMagma z = magma_from_json(load_document(z_path));
    ValidationReport morphism = check_morphism(g, z, pt->B);
    if (!morphism.valid()) return emit_report(out, morphism);
    out.emit(point_to_json(pullback_point(*pt, g, z)));
    return kExitValid;
}

int run_build_compose(const std::string& first, const std::string& second, const Output& out) {
    int status = kExitUsage;
    auto pt = load_valid_point(first, out, status);
    if (!pt) return status;
    auto pt2 = load_valid_point(second, out, status);
    if (!pt2) return status;
    ComposeResult result = compose_points(*pt, *pt2);
    if (!result.present()) {
        ValidationReport report;
        auto [x, y, c] = *result.witness;
        report.add("composable", {x, y, c});
        return emit_report(out, report);
    }
    out.emit(point_to_json(*result.point));
    return kExitValid;
}

int run_classify(const std::string& point_path, const Output& out) {
    int status = kExitUsage;
    auto pt = load_valid_point(point_path, out, status);
    if (!pt) return status;
    out.emit(action_to_json(phi_of_point(*pt)));
    return kExitValid;
}

int run_equivalent(const std::string& first, const std::string& second, const Output& out) {
    int status = kExitUsage;
    auto pt = load_valid_point(first, out, status);
    if (!pt) return status;
    auto pt2 = load_valid_point(second, out, status);
    if (!pt2) return status;
    auto alpha = equivalent_points(*pt, *pt2);
    if (!alpha) {
        ValidationReport report;
        report.add("equivalent", {});
        return emit_report(out, report);
    }
    out.emit(map_to_json(*alpha));
    return kExitValid;
}

int run_enumerate_actions(int x_size, const std::string& b_path, std::uint64_t max_candidates,
                          const Output& out) {
    FiniteMagma b = magma_from_json(load_document(b_path));
    std::vector<Action> actions = enumerate_actions(x_size, b, max_candidates);
    json items = json::array();
    for (const Action& a : actions) items.push_back(action_to_json(a));
    out.emit(json{{"kind", "action-list"}, {"count", actions.size()}, {"items", std::move(items)}});
    return kExitValid;
}

int run_enumerate_points(int x_size, const std::string& b_path, int max_a,
                         std::uint64_t max_candidates, const Output& out) {
    FiniteMagma b = magma_from_json(load_document(b_path));
    std::vector<RetractionPoint> points = enumerate_points(x_size, b, max_a, max_candidates);
    json items = json::array();
    for (const RetractionPoint& pt : points) items.push_back(point_to_json(pt));
    out.emit(json{{"kind", "point-list"}, {"count", points.size()}, {"items", std::move(items)}});
    return kExitValid;
}

int run_quotient(int x_size, const std::string& b_path, int max_a, std::uint64_t max_candidates,
                 const Output& out) {
    FiniteMagma b = magma_from_json(load_document(b_path));
    std::vector<RetractionPoint> points = enumerate_points(x_size, b, max_a, max_candidates);
    std::vector<EquivalenceClass> classes = quotient_points(points);
    std::vector<Action> actions = enumerate_actions(x_size, b, max_candidates);
    json class_docs = json::array();
    for (const EquivalenceClass& cls : classes)
        class_docs.push_back(json{{"action", action_to_json(cls.action)},
                                  {"class_size", cls.members.size()},
                                  {"members", cls.members}});
    bool counts_match = classes.size() == actions.size();
    json doc{{"kind", "quotient"},
             {"classes", std::move(class_docs)},
             {"totals",
              {{"points", points.size()}, {"classes", classes.size()}, {"actions", actions.size()}}},
             {"checks", json::array({json{{"name", "classes-equal-actions"},
                                          {"pass", counts_match}}})}};
    out.emit(doc);
    return counts_match ? kExitValid : kExitInvalid;
}

ValidationReport adjoin_example_report() {
    ValidationReport report;
    // The three-element pole table is the construction applied to the
    // one-element magma.
    FiniteMagma expected(3, 0);
    expected.table = {0, 1, 2, 1, 1, 0, 2, 0, 2};
    if (!(adjoin_poles(trivial_magma()) == expected)) report.add("pole-table", {});
    for (int n = 1; n <= 3; ++n)
        for_each_magma(n, [&](const FiniteMagma& x) {
            FiniteMagma m = adjoin_poles(x);
            if (!verify_unitary_magma(m).valid()) report.add("unit-laws", {x.size});
            const int zero = x.size, inf = x.size + 1;
            if (m.op(m.op(zero, zero), inf) != x.unit || m.op(zero, m.op(zero, inf)) != zero)
                report.add("nonassociativity-witness", {x.size});
        });
    return report;
}

ValidationReport medial_example_report() {
    ValidationReport report;
    std::vector<std::pair<std::string, FiniteMagma>> bases;
    bases.emplace_back("trivial", trivial_magma());
    bases.emplace_back("z2", cyclic_magma(2));
    FiniteMagma saturating(3, 0);
    saturating.install_unit_laws();
    saturating.at(1, 1) = 2;
    saturating.at(1, 2) = 2;
    saturating.at(2, 1) = 2;
    saturating.at(2, 2) = 2;
    bases.emplace_back("saturating3", saturating);
    bases.emplace_back("klein", direct_product(cyclic_magma(2), cyclic_magma(2)));
    for (std::size_t i = 0; i < bases.size(); ++i) {
        MedialOrderResult result = medial_order_point(bases[i].second);
        for (const Violation& v : result.closure.violations)
            report.add(bases[i].first + ":" + v.axiom, v.witness);
        if (result.points.empty()) report.add(bases[i].first + ":no-points", {});
        for (std::size_t j = 0; j < result.points.size(); ++j) {
            if (!verify_point(result.points[j]).valid())
                report.add(bases[i].first + ":point", {static_cast<int>(j)});
            for (const Violation& v : result.formula_reports[j].violations)
                report.add(bases[i].first + ":" + v.axiom, v.witness);
        }
    }
    return report;
}

int run_examples(const std::string& name, int samples, double tol, std::uint64_t seed,
                 const Output& out) {
    if (name == "interval") {
        double use_tol = tol > 0.0 ? tol : 1e-12;
        ValidationReport report = halfline_transport_check(samples, use_tol, seed);
        // The fixed nonassociativity witness from the endpoint rows.
        auto p = IntervalElement::pole(+1), m = IntervalElement::pole(-1);
        if (interval_oplus(interval_oplus(p, m), m).value != -1.0 ||
            interval_oplus(p, interval_oplus(m, m)).value != 0.0)
            report.add("nonassociativity-witness", {});
        return emit_report(out, report);
    }
    if (name == "sphere") {
        double use_tol = tol > 0.0 ? tol : 1e-9;
        return emit_report(out, sphere_verify(samples, use_tol, seed));
    }
    if (name == "adjoin") return emit_report(out, adjoin_example_report());
    if (name == "medial") return emit_report(out, medial_example_report());
    throw CLI::ValidationError("examples", "unknown example \"" + name + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"magmakit: a workbench for unitary magmas, retraction points and actions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    app.add_option("--out", out_path, "write the report document to this file instead of stdout");

    std::string in1, in2, in3;
    int x_size = 1, max_a = 4, samples = 10000;
    double tol = 0.0;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t max_candidates = kDefaultMaxCandidates;

    CLI::App* verify = app.add_subcommand("verify", "check a magma, point or action document");
    verify->add_option("file", in1, "document to verify")->required();

    CLI::App* build = app.add_subcommand("build", "construct derived structures");
    build->require_subcommand(1);
    CLI::App* build_sdp = build->add_subcommand("sdp", "semidirect product magma of an action");
    build_sdp->add_option("action", in1, "action document")->required();
    CLI::App* build_canonical =
        build->add_subcommand("canonical-point", "canonical retraction point of an action");
    build_canonical->add_option("action", in1, "action document")->required();
    CLI::App* build_pullback =
        build->add_subcommand("pullback", "pull a point back along a morphism into its base");
    build_pullback->add_option("point", in1, "point document")->required();
    build_pullback->add_option("map", in2, "map document for g: Z -> B")->required();
    build_pullback->add_option("z", in3, "magma document for Z")->required();
    CLI::App* build_compose = build->add_subcommand("compose", "compose two retraction points");
    build_compose->add_option("point", in1, "point from X to B")->required();
    build_compose->add_option("point2", in2, "point carried by B")->required();

    CLI::App* classify = app.add_subcommand("classify", "classifying action of a point");
    classify->add_option("point", in1, "point document")->required();

    CLI::App* equivalent = app.add_subcommand("equivalent", "decide equivalence of two points");
    equivalent->add_option("point", in1, "first point")->required();
    equivalent->add_option("point2", in2, "second point")->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "deterministic enumeration");
    enumerate->require_subcommand(1);
    CLI::App* enum_actions = enumerate->add_subcommand("actions", "all actions over (X, B)");
    enum_actions->add_option("--x", x_size, "size of X")->required();
    enum_actions->add_option("--b-file", in1, "base magma document")->required();
    enum_actions->add_option("--max-candidates", max_candidates, "candidate budget");
    CLI::App* enum_points = enumerate->add_subcommand("points", "all points over (X, B)");
    enum_points->add_option("--x", x_size, "size of X")->required();
    enum_points->add_option("--b-file", in1, "base magma document")->required();
    enum_points->add_option("--max-a", max_a, "carrier size bound");
    enum_points->add_option("--max-candidates", max_candidates, "candidate budget");

    CLI::App* quotient = app.add_subcommand("quotient", "classes of enumerated points");
    quotient->add_option("--x", x_size, "size of X")->required();
    quotient->add_option("--b-file", in1, "base magma document")->required();
    quotient->add_option("--max-a", max_a, "carrier size bound");
    quotient->add_option("--max-candidates", max_candidates, "candidate budget");

    CLI::App* examples =
        app.add_subcommand("examples", "interval, sphere, adjoin and medial example suites");
    examples->add_option("name", in1, "interval|sphere|adjoin|medial")->required();
    examples->add_option("--samples", samples, "number of samples for numeric checks");
    examples->add_option("--tol", tol, "tolerance for numeric checks (0 = per-example default)");
    examples->add_option("--seed", seed, "seed for the sample stream");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitValid : kExitUsage;
    }

    Output out{out_path};
    try {
        if (*verify) return run_verify(in1, out);
        if (*build_sdp) return run_build_sdp(in1, out);
        if (*build_canonical) return run_build_canonical(in1, out);
        if (*build_pullback) return run_build_pullback(in1, in2, in3, out);
        if (*build_compose) return run_build_compose(in1, in2, out);
        if (*classify) return run_classify(in1, out);
        if (*equivalent) return run_equivalent(in1, in2, out);
        if (*enum_actions) return run_enumerate_actions(x_size, in1, max_candidates, out);
        if (*enum_points) return run_enumerate_points(x_size, in1, max_a, max_candidates, out);
        if (*quotient) return run_quotient(x_size, in1, max_a, max_candidates, out);
        if (*examples) return run_examples(in1, samples, tol, seed, out);
    } catch (const SearchLimitError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.get_name() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
