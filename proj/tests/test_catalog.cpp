#include <doctest.h>

#include <set>
#include <sstream>

#include "bazaikin/catalog.hpp"
#include "oracles.hpp"

using namespace bazaikin;

TEST_CASE("census at p1 <= 7 is a single class") {
    const auto records = enumerate_classes(7, 1);
    REQUIRE(records.size() == 1);
    CHECK(records[0].canon.canon == SixTuple{3, 1, -1, -1, -1, -1});
    CHECK(records[0].p1 == 7);
    CHECK(records[0].curvature == CurvatureClass::AlmostPositive);
    CHECK_FALSE(records[0].new_example);  // (1,1,1,1,-1) is a four-same-sign representative

    const CensusSummary s = summarize_counts(records);
    CHECK(s.total == 1);
    CHECK(s.new_qp == 0);
}

TEST_CASE("census at p1 <= 39 contains the known pair at the top") {
    const auto records = enumerate_classes(39, 2);
    std::vector<CatalogRecord> top;
    for (const auto& r : records) {
        if (r.p1 == 39) top.push_back(r);
    }
    REQUIRE(top.size() == 2);
    CHECK(top[0].canon.canon == SixTuple{5, 5, -1, -3, -3, -3});
    CHECK(top[0].s == 7);
    CHECK(top[1].canon.canon == SixTuple{7, 1, 1, -3, -3, -3});
    CHECK(top[1].s == 11);
    CHECK(top[1].new_example);
    CHECK_FALSE(top[0].new_example);  // deleting a 5 leaves four entries of one sign
}

TEST_CASE("records satisfy their structural invariants") {
    for (const auto& r : enumerate_classes(150, 2)) {
        std::int64_t sos = 0;
        int positives = 0;
        for (int i = 0; i < 6; ++i) {
            sos += r.canon.canon[i] * r.canon.canon[i];
            if (r.canon.canon[i] > 0) ++positives;
        }
        CHECK(2 * r.p1 == sos);
        CHECK(r.new_example == (positives == 3));
        CHECK(!r.reps.empty());
        for (const auto& rep : r.reps) CHECK(is_admissible(rep));
    }
}

TEST_CASE("pruned enumeration matches the naive generator") {
    const auto naive = oracles::naive_class_set(100);
    const auto records = enumerate_classes(100, 2);
    std::set<SixTuple> pruned;
    for (const auto& r : records) pruned.insert(r.canon.canon);
    CHECK(pruned == naive);
}

TEST_CASE("exports are independent of the thread count") {
    const auto one = enumerate_classes(200, 1);
    const auto four = enumerate_classes(200, 4);
    CHECK(one == four);

    std::ostringstream a, b;
    export_records(one, CatalogFormat::JSONL, a);
    export_records(four, CatalogFormat::JSONL, b);
    CHECK(a.str() == b.str());
}

TEST_CASE("collisions at p1 <= 39") {
    const auto records = enumerate_classes(39, 2);

    const auto by_p1 = find_collisions(records, CollisionKey::P1);
    bool found_39 = false;
    for (const auto& group : by_p1) {
        if (group.front().p1 == 39) {
            found_39 = true;
            CHECK(group.size() == 2);
        }
    }
    CHECK(found_39);

    // The order of the degree-8 group separates the pair.
    for (const auto& group : find_collisions(records, CollisionKey::P1S)) {
        CHECK(group.front().p1 != 39);
    }
}

TEST_CASE("round trips through both formats") {
    const auto records = enumerate_classes(39, 2);
    for (CatalogFormat format : {CatalogFormat::JSONL, CatalogFormat::CSV}) {
        std::ostringstream out;
        export_records(records, format, out);
        std::istringstream in(out.str());
        const auto reloaded = load_records(in);
        CHECK(reloaded == records);

        // Re-export is byte-stable.
        std::ostringstream again;
        export_records(reloaded, format, again);
        CHECK(again.str() == out.str());
    }
}

TEST_CASE("ingest validation") {
    std::istringstream bad_sos(
        R"({"canon":[3,1,-1,-1,-1,-1],"p1":8,"s":1,"p2":0,"curvature":"AP","new_example":false,"reps":[[1,1,1,1,-1]]})");
    CHECK_THROWS_AS((void)load_records(bad_sos), ParseError);

    std::istringstream bad_json("{not json");
    CHECK_THROWS_AS((void)load_records(bad_json), ParseError);

    std::istringstream bad_csv("canon;p1;s;p2;curvature;new_example;reps\n1 2 3;x;;;QP;true;\n");
    CHECK_THROWS_AS((void)load_records(bad_csv), ParseError);

    try {
        std::istringstream with_line(
            "canon;p1;s;p2;curvature;new_example;reps\n"
            "3 1 -1 -1 -1 -1;7;1;0;AP;false;1 1 1 1 -1\n"
            "3 1 -1 -1 -1 -1;9;1;0;AP;false;1 1 1 1 -1\n");
        (void)load_records(with_line);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("enumerate rejects tiny bounds") {
    CHECK_THROWS_AS((void)enumerate_classes(2, 1), InvalidInput);
}
