#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "slk/ring.hpp"

using namespace slk;

TEST_CASE("smith diagonal, worked instances") {
    CHECK(smith_diagonal(IntMatrix{{2, 0}, {0, 3}}) == std::vector<long long>{1, 6});
    CHECK(smith_diagonal(IntMatrix{{0}}) == std::vector<long long>{});
    CHECK(smith_diagonal(IntMatrix{{1, 0}, {0, 1}}) == std::vector<long long>{1, 1});
    CHECK(smith_diagonal(IntMatrix(0, 3)) == std::vector<long long>{});
    CHECK(smith_diagonal(IntMatrix{{6, 4}, {4, 6}}) == std::vector<long long>{2, 10});
}

TEST_CASE("smith diagonal divisibility chain") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = 1 + static_cast<int>(gen() % 4);
        const int cols = 1 + static_cast<int>(gen() % 4);
        IntMatrix a(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) a.at(r, c) = static_cast<int>(gen() % 19) - 9;
        const auto d = smith_diagonal(a);
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            CHECK(d[i] > 0);
            CHECK(d[i + 1] % d[i] == 0);
        }
    }
}

TEST_CASE("kernel count, worked instances") {
    // 2x1 systems over Z_5: the all-zero matrix leaves one free bead, the
    // unit pivot pins it.
    CHECK(kernel_count(IntMatrix{{0}, {0}}, Modulus(5)) == 5);
    CHECK(kernel_count(IntMatrix{{1}, {0}}, Modulus(5)) == 1);
    // empty system: every vector is a solution
    CHECK(kernel_count(IntMatrix(0, 3), Modulus(4)) == 64);
    CHECK(kernel_count(IntMatrix(2, 0), Modulus(4)) == 1);
}

TEST_CASE("kernel count matches exhaustive enumeration") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 7);
        const int rows = 1 + static_cast<int>(gen() % 3);
        const int cols = 1 + static_cast<int>(gen() % 4);
        IntMatrix a(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) a.at(r, c) = static_cast<int>(gen() % n);
        CHECK(kernel_count(a, Modulus(n)) == oracle::kernel_count_brute(a, Modulus(n)));
    }
}

TEST_CASE("kernel count is stable under row and column permutations") {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 7);
        const int rows = 2 + static_cast<int>(gen() % 3);
        const int cols = 2 + static_cast<int>(gen() % 3);
        IntMatrix a(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) a.at(r, c) = static_cast<int>(gen() % n);
        IntMatrix b(rows, cols);
        std::vector<int> rp(rows), cp(cols);
        for (int i = 0; i < rows; ++i) rp[i] = i;
        for (int i = 0; i < cols; ++i) cp[i] = i;
        std::shuffle(rp.begin(), rp.end(), gen);
        std::shuffle(cp.begin(), cp.end(), gen);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) b.at(r, c) = a.at(rp[r], cp[c]);
        CHECK(kernel_count(a, Modulus(n)) == kernel_count(b, Modulus(n)));
    }
}

TEST_CASE("zero and identity block patterns") {
    const Modulus n(6);
    IntMatrix zero(3, 4);
    CHECK(kernel_count(zero, n) == 6ull * 6 * 6 * 6);
    IntMatrix id{{1, 0}, {0, 1}, {0, 0}};
    CHECK(kernel_count(id, n) == 1);
}
