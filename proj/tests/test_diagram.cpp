#include <doctest.h>

#include "slk/diagram.hpp"
#include "slk/profile.hpp"

using namespace slk;

namespace {

// Unknotted projective plane: one crossing, one marked vertex, four parallel
// semiarcs between them.
const char* kP2 = "X(1,2,4,3) M13(4,3,2,1)";
// Standard torus: two marked vertices with opposed bars.
const char* kT2 = "M13(1,2,3,4) M24(4,3,2,1)";

}  // namespace

TEST_CASE("parse basics") {
    const auto d = parse_diagram(kP2);
    CHECK(d.semiarc_count == 4);
    CHECK(d.crossings.size() == 1);
    CHECK(d.vertices.size() == 1);
    CHECK(d.free_loops == 0);
    CHECK(d.ch_index() == 2);

    const auto loop = parse_diagram("O");
    CHECK(loop.free_loops == 1);
    CHECK(loop.semiarc_count == 0);
    CHECK(loop.ch_index() == 0);
}

TEST_CASE("parse normalizes sparse labels") {
    const auto d = parse_diagram("X(10,20,40,30) M24(40,30,20,10)");
    CHECK(d.semiarc_count == 4);
    CHECK(d.crossings[0].a == 1);
    CHECK(d.crossings[0].b == 2);
    CHECK(d.crossings[0].c == 4);
    CHECK(d.crossings[0].d == 3);
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_diagram("X(1,2,2)"), ParseError);
    CHECK_THROWS_AS(parse_diagram("Y(1,2,3,4)"), ParseError);
    CHECK_THROWS_AS(parse_diagram("X(1,2,3,4) M13(1,2,3,3)"), ParseError);

    try {
        parse_diagram("O\nX(1,2,2)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }

    // dangling semiarc: label used once or more than twice
    CHECK_THROWS_AS(parse_diagram("X(1,2,3,4)"), ParseError);
    CHECK_THROWS_AS(parse_diagram("X(1,1,2,2) M13(1,1,2,2)"), ParseError);
}

TEST_CASE("serialize round trip") {
    for (const char* code : {kP2, kT2, "O", "X(1,2,1,2)",
                             "X(1,12,9,2) X(4,11,12,5) X(9,2,3,10) X(10,5,6,11) "
                             "M13(1,4,7,8) M24(8,7,6,3)"}) {
        const auto d = parse_diagram(code);
        CHECK(parse_diagram(serialize(d)) == d);
    }
}

TEST_CASE("smoothing the projective plane gives one-crossing unknots") {
    const auto d = parse_diagram(kP2);
    for (auto dir : {Smoothing::plus, Smoothing::minus}) {
        const auto s = smooth(d, dir);
        CHECK(s.vertices.empty());
        CHECK(s.crossings.size() == 1);
        CHECK(s.free_loops == 0);
        CHECK(s.semiarc_count == 2);
        const auto p = analyze(s);
        REQUIRE(p.components.size() == 1);
        CHECK(p.components[0].curves == 1);
    }
}

TEST_CASE("smoothing the torus gives single circles both ways") {
    const auto d = parse_diagram(kT2);
    for (auto dir : {Smoothing::plus, Smoothing::minus}) {
        const auto s = smooth(d, dir);
        CHECK(s.crossings.empty());
        CHECK(s.free_loops == 1);
        CHECK(s.semiarc_count == 0);
    }
}

TEST_CASE("smoothing without vertices is the identity") {
    const auto d = parse_diagram("X(1,2,1,2) O");
    CHECK(smooth(d, Smoothing::plus) == d);
    CHECK(smooth(d, Smoothing::minus) == d);
}

TEST_CASE("smoothing keeps the crossing count") {
    const auto d = parse_diagram(kP2);
    CHECK(smooth(d, Smoothing::plus).crossings.size() == d.crossings.size());
    CHECK(smooth(d, Smoothing::minus).crossings.size() == d.crossings.size());
}

TEST_CASE("profiles of the standard small diagrams") {
    const auto p2 = analyze(parse_diagram(kP2));
    REQUIRE(p2.components.size() == 1);
    CHECK(p2.components[0].euler == 1);
    CHECK(!p2.components[0].orientable);

    const auto t2 = analyze(parse_diagram(kT2));
    REQUIRE(t2.components.size() == 1);
    CHECK(t2.components[0].euler == 0);
    CHECK(t2.components[0].orientable);

    const auto sphere = analyze(parse_diagram("O"));
    REQUIRE(sphere.components.size() == 1);
    CHECK(sphere.components[0].euler == 2);
    CHECK(sphere.components[0].orientable);
}

TEST_CASE("fuzz: k = 0 gives nothing, fixed seed reproduces bytes") {
    const auto d = parse_diagram(kP2);
    CHECK(fuzz_moves(d, 5, 0).empty());

    const auto a = fuzz_moves(d, 42, 10);
    const auto b = fuzz_moves(d, 42, 10);
    REQUIRE(a.size() == 10);
    for (size_t i = 0; i < a.size(); ++i) CHECK(serialize(a[i]) == serialize(b[i]));

    const auto c = fuzz_moves(d, 43, 10);
    bool any_different = false;
    for (size_t i = 0; i < c.size(); ++i) any_different |= !(a[i] == c[i]);
    CHECK(any_different);
}

TEST_CASE("fuzz variants stay valid and keep the surface profile") {
    for (const char* code : {kP2, kT2, "O"}) {
        const auto d = parse_diagram(code);
        const auto base = analyze(d);
        for (const auto& v : fuzz_moves(d, 7, 12)) {
            validate(v);
            const auto p = analyze(v);
            REQUIRE(p.components.size() == base.components.size());
            for (size_t i = 0; i < p.components.size(); ++i) {
                CHECK(p.components[i].euler == base.components[i].euler);
                CHECK(p.components[i].orientable == base.components[i].orientable);
            }
        }
    }
}

TEST_CASE("kink insertion on the bare unknot") {
    const auto d = parse_diagram("O");
    // every single-move variant of the free loop is a one-crossing unknot
    for (const auto& v : fuzz_moves(d, 3, 8)) {
        CHECK(v.free_loops + v.crossings.size() >= 1);
        if (v.crossings.size() == 1 && v.free_loops == 0) CHECK(v.semiarc_count == 2);
    }
}
