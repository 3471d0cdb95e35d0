#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "magmakit/io.hpp"
#include "support.hpp"

using namespace magmakit;
using namespace testsupport;

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(MAGMAKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
    int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::filesystem::path data_dir() {
    auto dir = std::filesystem::temp_directory_path() / "magmakit_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_doc(const std::string& name, const json& doc) {
    auto path = data_dir() / name;
    std::ofstream out(path);
    out << doc.dump();
    return path.string();
}

std::string write_text(const std::string& name, const std::string& text) {
    auto path = data_dir() / name;
    std::ofstream out(path);
    out << text;
    return path.string();
}

}  // namespace

TEST_CASE("verify accepts a valid magma and rejects a broken one") {
    std::string good = write_doc("z3.json", magma_to_json(cyclic_magma(3)));
    RunResult ok = run_cli("verify " + good);
    CHECK(ok.status == 0);
    CHECK(json::parse(ok.output)["valid"] == true);

    FiniteMagma broken = cyclic_magma(2);
    broken.at(0, 1) = 0;
    std::string bad = write_doc("broken.json", magma_to_json(broken));
    RunResult fail = run_cli("verify " + bad);
    CHECK(fail.status == 1);
    json report = json::parse(fail.output);
    CHECK(report["valid"] == false);
    CHECK(report["violations"][0]["axiom"] == "left-unit");
}

TEST_CASE("verify dispatches on the document kind") {
    std::string pt = write_doc("pt.json", point_to_json(product_point(cyclic_magma(2), z2())));
    CHECK(run_cli("verify " + pt).status == 0);
    std::string act = write_doc("act.json", action_to_json(inversion_action()));
    CHECK(run_cli("verify " + act).status == 0);
}

TEST_CASE("parse and usage problems exit with status 2") {
    std::string junk = write_text("junk.json", "{not json");
    CHECK(run_cli("verify " + junk).status == 2);
    std::string map = write_doc("map.json", map_to_json(ElementMap::identity(2)));
    CHECK(run_cli("verify " + map).status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("verify /nonexistent/file.json").status == 2);
}

TEST_CASE("canonical point then classify round-trips the action document") {
    std::string act = write_doc("inv.json", action_to_json(inversion_action()));
    std::string pt_path = (data_dir() / "inv_point.json").string();
    RunResult built = run_cli("build canonical-point " + act + " --out " + pt_path);
    REQUIRE(built.status == 0);
    RunResult classified = run_cli("classify " + pt_path);
    REQUIRE(classified.status == 0);
    CHECK(action_from_json(json::parse(classified.output)) == inversion_action());
}

TEST_CASE("build sdp emits the S3 table for the inversion action") {
    std::string act = write_doc("inv2.json", action_to_json(inversion_action()));
    RunResult result = run_cli("build sdp " + act);
    REQUIRE(result.status == 0);
    FiniteMagma m = magma_from_json(json::parse(result.output));
    CHECK(m.size == 6);
    CHECK(find_isomorphism(m, s3_table()).has_value());
}

TEST_CASE("build pullback emits a valid point") {
    std::string pt = write_doc("pb_pt.json", point_to_json(product_point(cyclic_magma(2), z2())));
    std::string g = write_doc("pb_g.json", map_to_json(ElementMap::identity(2)));
    std::string z = write_doc("pb_z.json", magma_to_json(z2()));
    RunResult result = run_cli("build pullback " + pt + " " + g + " " + z);
    REQUIRE(result.status == 0);
    CHECK(verify_point(point_from_json(json::parse(result.output))).valid());
}

TEST_CASE("build compose emits the composite or a witness") {
    std::string pt = write_doc("c_pt.json", point_to_json(product_point(cyclic_magma(2), z2())));
    RetractionPoint partner = identity_point(z2());
    std::string pt2 = write_doc("c_pt2.json", point_to_json(partner));
    RunResult result = run_cli("build compose " + pt + " " + pt2);
    REQUIRE(result.status == 0);
    CHECK(verify_point(point_from_json(json::parse(result.output))).valid());
}

TEST_CASE("equivalent emits the connecting map or a refusal") {
    RetractionPoint pt = product_point(cyclic_magma(2), z2());
    std::string a = write_doc("eq_a.json", point_to_json(pt));
    std::string b = write_doc("eq_b.json", point_to_json(canonical_point(phi_of_point(pt))));
    RunResult same = run_cli("equivalent " + a + " " + b);
    CHECK(same.status == 0);
    CHECK(json::parse(same.output)["kind"] == "map");

    // A point with a different classifying action over the same ends.
    std::vector<RetractionPoint> pts = enumerate_points(2, z2(), 3);
    bool tested = false;
    for (const RetractionPoint& other : pts) {
        if (phi_of_point(other) == phi_of_point(pt)) continue;
        std::string c = write_doc("eq_c.json", point_to_json(other));
        RunResult different = run_cli("equivalent " + a + " " + c);
        CHECK(different.status == 1);
        CHECK(json::parse(different.output)["violations"][0]["axiom"] == "equivalent");
        tested = true;
        break;
    }
    CHECK(tested);
}

TEST_CASE("enumerate actions reports the exact count") {
    std::string b = write_doc("b_z2.json", magma_to_json(z2()));
    RunResult result = run_cli("enumerate actions --x 2 --b-file " + b);
    REQUIRE(result.status == 0);
    json doc = json::parse(result.output);
    CHECK(doc["kind"] == "action-list");
    CHECK(doc["count"] == 130);
    CHECK(doc["items"].size() == 130);
}

TEST_CASE("quotient reports classes equal to actions once carriers reach |X||B|") {
    std::string b = write_doc("b_z2q.json", magma_to_json(z2()));
    // Carriers up to 4 see every canonical representative, so the class
    // count matches the action count; a lower bound misses classes.
    RunResult result = run_cli("quotient --x 2 --b-file " + b + " --max-a 4");
    REQUIRE(result.status == 0);
    json doc = json::parse(result.output);
    CHECK(doc["checks"][0]["name"] == "classes-equal-actions");
    CHECK(doc["checks"][0]["pass"] == true);
    CHECK(doc["totals"]["classes"] == doc["totals"]["actions"]);

    RunResult truncated = run_cli("quotient --x 2 --b-file " + b + " --max-a 3");
    CHECK(truncated.status == 1);
    CHECK(json::parse(truncated.output)["checks"][0]["pass"] == false);
}

TEST_CASE("enumeration refusals exit with status 2") {
    std::string b = write_doc("b_z2r.json", magma_to_json(z2()));
    CHECK(run_cli("enumerate points --x 2 --b-file " + b + " --max-a 5").status == 2);
    CHECK(run_cli("enumerate actions --x 2 --b-file " + b + " --max-candidates 10").status == 2);
}

TEST_CASE("identical requests produce byte-identical reports") {
    std::string b = write_doc("b_det.json", magma_to_json(z2()));
    RunResult r1 = run_cli("quotient --x 2 --b-file " + b + " --max-a 4");
    RunResult r2 = run_cli("quotient --x 2 --b-file " + b + " --max-a 4");
    CHECK(r1.output == r2.output);
    RunResult e1 = run_cli("examples sphere --samples 200 --seed 7");
    RunResult e2 = run_cli("examples sphere --samples 200 --seed 7");
    CHECK(e1.output == e2.output);
}

TEST_CASE("example suites all pass with default parameters") {
    CHECK(run_cli("examples interval --samples 2000").status == 0);
    CHECK(run_cli("examples sphere --samples 2000").status == 0);
    CHECK(run_cli("examples adjoin").status == 0);
    CHECK(run_cli("examples medial").status == 0);
    CHECK(run_cli("examples bogus").status == 2);
}
