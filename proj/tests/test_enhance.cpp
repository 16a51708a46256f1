#include <doctest.h>

#include "oracles.hpp"
#include "slk/enhance.hpp"

using namespace slk;

namespace {

Bikei x1() {
    return Bikei::from_tables({{2, 2}, {1, 1}}, {{2, 2}, {1, 1}});
}

Bikei x2() {
    return Bikei::from_tables({{1, 1}, {2, 2}}, {{1, 1}, {2, 2}});
}

const char* kP2 = "X(1,2,4,3) M13(4,3,2,1)";

// Z_5 module over the trivial 2-element bikei, the worked warm-up instance.
BikeiModule z5_demo() {
    return BikeiModule::from_blocks(x2(), 5, {{1, 4}, {1, 4}}, {{0, 2}, {0, 0}},
                                    {{1, 1}, {4, 4}});
}

}  // namespace

TEST_CASE("polynomial rendering") {
    InvariantPolynomial p;
    CHECK(p.to_string() == "0");
    p.terms[1] = 5;
    p.terms[3] = 2;
    p.terms[9] = 1;
    CHECK(p.to_string() == "5u+2u^3+u^9");
    CHECK(p.coefficient_sum() == 8);
    InvariantPolynomial q;
    q.terms[27] = 30;
    q.terms[9] = 18;
    CHECK(q.to_string() == "18u^9+30u^27");
}

TEST_CASE("bead kernels of the Z_5 worked example") {
    const auto d = parse_diagram(kP2);
    const auto m = z5_demo();
    REQUIRE(!verify_module(m));
    const auto colorings = enumerate_colorings(d, m.base());
    REQUIRE(colorings.size() == 2);
    // all-1 coloring leaves the single bead free; all-2 pins it
    CHECK(bead_module_size(d, colorings[0], m) == 5);
    CHECK(bead_module_size(d, colorings[1], m) == 1);
    CHECK(enhanced_polynomial(d, m).to_string() == "u+u^5");
}

TEST_CASE("free loop contributes one free bead") {
    const auto d = parse_diagram("O");
    const auto m = z5_demo();
    const auto colorings = enumerate_colorings(d, m.base());
    REQUIRE(colorings.size() == 2);
    for (const auto& f : colorings) CHECK(bead_module_size(d, f, m) == 5);
}

TEST_CASE("empty homset gives the zero polynomial") {
    const auto d = parse_diagram(kP2);
    auto search = search_modules(x1(), Modulus(3));
    REQUIRE(!search.empty());
    // no colorings by the nontrivial two-element bikei
    CHECK(enhanced_polynomial(d, search.front()).to_string() == "0");
}

TEST_CASE("coefficient sum equals the counting invariant") {
    const auto m = z5_demo();
    for (const char* code : {kP2, "X(1,2,1,2)", "O", "M13(1,2,3,4) M24(4,3,2,1)"}) {
        const auto d = parse_diagram(code);
        CHECK(enhanced_polynomial(d, m).coefficient_sum() ==
              counting_invariant(d, m.base()));
    }
}

TEST_CASE("kernel sizes are prime powers over a prime modulus") {
    const auto m = z5_demo();
    for (const char* code : {kP2, "X(1,2,1,2)", "O O"}) {
        const auto d = parse_diagram(code);
        for (const auto& f : enumerate_colorings(d, m.base())) {
            std::uint64_t k = bead_module_size(d, f, m);
            while (k % 5 == 0) k /= 5;
            CHECK(k == 1);
        }
    }
}

TEST_CASE("bead counts agree with direct enumeration") {
    const auto m = z5_demo();
    for (const char* code : {kP2, "X(1,2,1,2)", "X(1,2,4,3) M24(4,3,2,1)"}) {
        const auto d = parse_diagram(code);
        for (const auto& f : enumerate_colorings(d, m.base()))
            CHECK(bead_module_size(d, f, m) == oracle::bead_count_brute(d, f, m));
    }
}

TEST_CASE("flipped reading yields the same kernel sizes") {
    const auto m = z5_demo();
    for (const char* code : {kP2, "X(1,2,1,2)", "X(1,4,3,2) X(3,2,1,4)"}) {
        const auto d = parse_diagram(code);
        for (const auto& f : enumerate_colorings(d, m.base())) {
            CHECK(bead_module_size(d, f, m, BeadReading::forward) ==
                  bead_module_size(d, f, m, BeadReading::flipped));
        }
    }
}

TEST_CASE("mismatched module base is rejected") {
    const auto d = parse_diagram(kP2);
    const auto m = z5_demo();
    Coloring wrong{{3, 3, 3, 3}, {}};
    CHECK_THROWS_AS(bead_module_size(d, wrong, m), std::invalid_argument);
}
