#include <doctest.h>

#include "oracles.hpp"
#include "slk/coloring.hpp"

using namespace slk;

namespace {

Bikei x1() {
    return Bikei::from_tables({{2, 2}, {1, 1}}, {{2, 2}, {1, 1}});
}

Bikei x2() {
    return Bikei::from_tables({{1, 1}, {2, 2}}, {{1, 1}, {2, 2}});
}

const char* kP2 = "X(1,2,4,3) M13(4,3,2,1)";

}  // namespace

TEST_CASE("projective plane coloring counts") {
    const auto d = parse_diagram(kP2);
    CHECK(counting_invariant(d, x1()) == 0);
    CHECK(counting_invariant(d, x2()) == 2);
}

TEST_CASE("free loop takes one independent color") {
    const auto d = parse_diagram("O");
    CHECK(counting_invariant(d, x1()) == 2);
    CHECK(counting_invariant(d, takasaki(5)) == 5);
    const auto two = parse_diagram("O O");
    CHECK(counting_invariant(two, x2()) == 4);
}

TEST_CASE("enumeration matches the n^m scan on small diagrams") {
    const std::vector<const char*> codes = {
        kP2,
        "M13(1,2,3,4) M24(4,3,2,1)",
        "X(1,2,1,2)",
        "X(1,2,4,3) M24(4,3,2,1) O",
        "X(1,4,3,2) X(3,2,1,4)",
    };
    for (const char* code : codes) {
        const auto d = parse_diagram(code);
        for (const Bikei& b : {x1(), x2(), takasaki(3)}) {
            const auto fast = enumerate_colorings(d, b);
            const auto slow = oracle::enumerate_colorings_brute(d, b);
            REQUIRE(fast.size() == slow.size());
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("colorings are sorted and unique") {
    const auto d = parse_diagram("X(1,2,4,3) M24(4,3,2,1) O");
    const auto all = enumerate_colorings(d, takasaki(3));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("every reported coloring satisfies both reading conventions") {
    for (const char* code : {kP2, "X(1,2,1,2)", "M13(1,2,3,4) M24(4,3,2,1)"}) {
        const auto d = parse_diagram(code);
        for (const Bikei& b : {x1(), x2(), takasaki(5)}) {
            for (const auto& c : enumerate_colorings(d, b)) {
                CHECK(coloring_ok(d, b, c, false));
                CHECK(coloring_ok(d, b, c, true));
            }
        }
    }
}

TEST_CASE("flipped reading accepts exactly the same colorings") {
    const auto d = parse_diagram("X(1,4,3,2) X(3,2,1,4)");
    const Bikei b = takasaki(4);
    const auto straight = enumerate_colorings(d, b);
    const auto brute = oracle::enumerate_colorings_brute(d, b);
    CHECK(straight == brute);
    for (const auto& c : brute) CHECK(coloring_ok(d, b, c, true));
}

TEST_CASE("constant colorings are valid exactly on operation fixed points") {
    const Bikei b = takasaki(3);  // x under x = x, x over x = x
    const auto d = parse_diagram("X(1,2,1,2)");
    int constants = 0;
    for (const auto& c : enumerate_colorings(d, b)) {
        if (c.semiarcs[0] == c.semiarcs[1]) ++constants;
    }
    // all three constants color the kink since the diagonal is fixed
    CHECK(constants == 3);
}

TEST_CASE("counting invariant multiplies over split unions") {
    const auto left = parse_diagram(kP2);
    const auto split = parse_diagram("X(1,2,4,3) M13(4,3,2,1) O");
    const Bikei b = x2();
    CHECK(counting_invariant(split, b) ==
          counting_invariant(left, b) * counting_invariant(parse_diagram("O"), b));
}
