#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "lam/magic.hpp"

using namespace lam;

TEST_CASE("magic constants") {
    CHECK(magic_constant(3) == 15);
    CHECK(magic_constant(4) == 34);
    CHECK(magic_constant(6) == 111);
    CHECK(magic_constant(10) == 505);
}

TEST_CASE("order 3 is the reference square") {
    MagicSquare s = magic_square(3);
    std::vector<std::vector<long long>> omega{{8, 1, 6}, {3, 5, 7}, {4, 9, 2}};
    CHECK(s.entries == omega);
}

TEST_CASE("orders 3..16 are genuine magic squares") {
    for (int n = 3; n <= 16; ++n) {
        CAPTURE(n);
        CHECK(is_magic(magic_square(n)));
    }
    CHECK_THROWS_AS(magic_square(2), Error);
    CHECK_THROWS_AS(magic_square(1), Error);
}

TEST_CASE("shifted blocks") {
    MagicSquare s = magic_square(3);
    CHECK(shifted_block(s, 1, 4) == s.entries);
    std::vector<std::vector<long long>> omega2{{17, 10, 15}, {12, 14, 16}, {13, 18, 11}};
    CHECK(shifted_block(s, 2, 4) == omega2);
    std::vector<std::vector<long long>> omega4{{35, 28, 33}, {30, 32, 34}, {31, 36, 29}};
    CHECK(shifted_block(s, 4, 4) == omega4);
    CHECK_THROWS_AS(shifted_block(s, 5, 4), Error);
    CHECK_THROWS_AS(shifted_block(s, 0, 4), Error);
}

TEST_CASE("block line sums and tiling") {
    for (int n : {3, 4, 5}) {
        MagicSquare s = magic_square(n);
        long long n3 = static_cast<long long>(n) * n * n;
        const long long q = 6;
        std::vector<char> seen(q * n * n + 1, 0);
        for (long long i = 1; i <= q; ++i) {
            auto b = shifted_block(s, i, q);
            for (int j = 0; j < n; ++j) {
                long long rs = 0, cs = 0;
                for (int k = 0; k < n; ++k) {
                    rs += b[j][k];
                    cs += b[k][j];
                }
                CHECK(rs == magic_constant(n) + (i - 1) * n3);
                CHECK(cs == magic_constant(n) + (i - 1) * n3);
            }
            for (const auto& row : b)
                for (long long v : row) {
                    REQUIRE(v >= 1);
                    REQUIRE(v <= q * n * n);
                    CHECK(!seen[v]);
                    seen[v] = 1;
                }
        }
        for (long long v = 1; v <= q * n * n; ++v) CHECK(seen[v]);
    }
}
