/**
 * Tests for the named relation checkers: the documented spot instances
 * first, then a reduced grid sweep. The full-size grid is exercised by
 * the acceptance binary.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aschur/relations.hpp"

using namespace aschur;

// ---------------------------------------------------------------------------
// Individual instances
// ---------------------------------------------------------------------------

TEST_CASE("split-merge expansion at thickness one") {
    CHECK(verify_relation("mergesplit", {1, 1, 1, 1}));
    CHECK(verify_relation("mergesplit", {2, 1, 1, 2}));
    CHECK(verify_relation("mergesplit", {2, 2, 2, 2}));
}

TEST_CASE("thin dot slide and its one-strand elementary form agree") {
    CHECK(verify_relation("demazurerel", {}));
    // At a = b = d = 1 the first elementary dot-slide family reduces to
    // the thin relation; both must hold.
    CHECK(verify_relation("jonrel", {1, 1, 1, 1}));
}

TEST_CASE("generating-function dot slide at thickness two") {
    CHECK(verify_relation("bingley", {1, 2, 2}, 4));
}

TEST_CASE("spot compositions and zero forks") {
    CHECK(verify_relation("secondone", {}));
    CHECK(verify_relation("zeroforks", {0}));
    CHECK(verify_relation("zeroforks", {2}));
}

TEST_CASE("unknown ids and malformed tuples are rejected") {
    CHECK_THROWS_AS(verify_relation("nosuchrelation", {}), std::invalid_argument);
    CHECK_THROWS_AS(verify_relation("mergesplit", {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_relation("mergesplit", {1, 1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(verify_relation("sliders", {5, 1, 1, 1}), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Reduced grid sweep
// ---------------------------------------------------------------------------

TEST_CASE("every relation in the reduced grid holds") {
    for (const RelationInstance& inst : relation_grid(2, 2, 4)) {
        CAPTURE(inst.name);
        CAPTURE(inst.params);
        REQUIRE(verify_relation(inst.name, inst.params, inst.N));
    }
}
