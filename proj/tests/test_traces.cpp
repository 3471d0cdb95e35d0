#include <doctest.h>

#include "magmakit/medial.hpp"
#include "magmakit/traces.hpp"
#include "support.hpp"

using namespace magmakit;
using namespace testsupport;

TEST_CASE("an associative carrier has all six trace flags") {
    RetractionPoint pt = product_point(cyclic_magma(2), z2());
    TraceFlags flags = trace_flags(pt);
    CHECK(flags.kks);
    CHECK(flags.sks);
    CHECK(flags.oneks);
    CHECK(flags.kss);
    CHECK(flags.ksk);
    CHECK(flags.kso);
}

TEST_CASE("the canonical S3 point has all trace flags") {
    TraceFlags flags = trace_flags(canonical_point(inversion_action()));
    CHECK((flags.kks && flags.sks && flags.oneks && flags.kss && flags.ksk && flags.kso));
}

TEST_CASE("the adjoin-poles point breaks at least one trace with a witness") {
    TraceFlags flags = trace_flags(adjoin_poles_point(cyclic_magma(2)));
    bool some_false = !flags.kks || !flags.sks || !flags.oneks || !flags.kss || !flags.ksk ||
                      !flags.kso;
    CHECK(some_false);
    if (!flags.kss) {
        REQUIRE(flags.w_kss.has_value());
        auto [x, b, b2] = *flags.w_kss;
        RetractionPoint pt = adjoin_poles_point(cyclic_magma(2));
        CHECK(pt.A.op(pt.k(x), pt.A.op(pt.s(b), pt.s(b2))) !=
              pt.A.op(pt.A.op(pt.k(x), pt.s(b)), pt.s(b2)));
    }
}

TEST_CASE("ladder items all verify on an associative carrier") {
    CaseLadderReport report = particular_case_check(canonical_point(inversion_action()));
    REQUIRE(report.items.size() == 10);
    for (const LadderItem& item : report.items) {
        CHECK(item.hypothesis_met);
        CHECK(item.conclusion_verified);
    }
    CHECK(report.sound());
}

TEST_CASE("ladder items degenerate over a trivial base") {
    RetractionPoint pt = identity_point(cyclic_magma(3));
    CaseLadderReport report = particular_case_check(pt);
    for (const LadderItem& item : report.items)
        if (item.hypothesis_met) CHECK(item.conclusion_verified);
    // With B trivial, kks/ksk/oneks-style traces reduce to associativity of A.
    CHECK(report.items[0].hypothesis_met == classify_properties(pt.A).associative);
}

TEST_CASE("no hypothesis-met item ever fails across enumerated points") {
    for (const FiniteMagma& b : {z2(), order2_idempotent()})
        for_each_point(2, b, 3, [&](const RetractionPoint& pt) {
            CHECK(particular_case_check(pt).sound());
        });
}

TEST_CASE("a kss-true ksk-false point verifies item 4") {
    // Search the example gallery for a point separating kss from ksk.
    bool found = false;
    for (int n = 1; n <= 3 && !found; ++n)
        for_each_magma(n, [&](const FiniteMagma& x) {
            if (found) return;
            RetractionPoint pt = adjoin_poles_point(x);
            TraceFlags flags = trace_flags(pt);
            if (flags.kss && !flags.ksk) {
                found = true;
                CaseLadderReport report = particular_case_check(pt);
                CHECK(report.items[3].hypothesis_met);
                CHECK(report.items[3].conclusion_verified);
            }
        });
    for (const FiniteMagma& b : {z2(), order2_idempotent()}) {
        if (found) break;
        for_each_point(2, b, 4, [&](const RetractionPoint& pt) {
            if (found) return;
            TraceFlags flags = trace_flags(pt);
            if (flags.kss && !flags.ksk) {
                found = true;
                CaseLadderReport report = particular_case_check(pt);
                CHECK(report.items[3].hypothesis_met);
                CHECK(report.items[3].conclusion_verified);
            }
        });
    }
    CHECK(found);
}

TEST_CASE("monoid branch passes on the S3 point with a full pair bijection") {
    RetractionPoint pt = canonical_point(inversion_action());
    SpecialStructureReport report = special_structure_check(pt);
    REQUIRE(report.carrier_associative);
    CHECK(report.monoid.valid());
    REQUIRE(report.carrier_left_loop);  // a group is both
    CHECK(report.left_loop.valid());
}

TEST_CASE("monoid branch passes on every enumerated associative point") {
    for_each_point(2, z2(), 3, [&](const RetractionPoint& pt) {
        SpecialStructureReport report = special_structure_check(pt);
        if (report.carrier_associative) CHECK(report.monoid.valid());
    });
}

TEST_CASE("left-loop branch passes on the order-5 nonassociative loop") {
    auto loop = find_nonassociative_loop(5);
    REQUIRE(loop.has_value());
    RetractionPoint pt = identity_point(*loop);
    REQUIRE(verify_point(pt).valid());
    SpecialStructureReport report = special_structure_check(pt);
    REQUIRE(report.carrier_left_loop);
    CHECK_FALSE(report.carrier_associative);
    CHECK(report.left_loop.valid());
}

TEST_CASE("neither branch applies to the adjoin-poles point") {
    SpecialStructureReport report = special_structure_check(adjoin_poles_point(cyclic_magma(2)));
    CHECK_FALSE(report.carrier_associative);
    CHECK_FALSE(report.carrier_left_loop);
    CHECK(report.monoid.valid());     // untouched
    CHECK(report.left_loop.valid());  // untouched
}

TEST_CASE("medial construction points never break the ladder") {
    for (const FiniteMagma& b :
         {z2(), trivial_magma(), direct_product(z2(), z2())}) {
        MedialOrderResult result = medial_order_point(b);
        for (const RetractionPoint& pt : result.points)
            CHECK(particular_case_check(pt).sound());
    }
}
