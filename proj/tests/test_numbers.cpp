#include "doctest.h"

#include "polychrome/graph.hpp"
#include "polychrome/numbers.hpp"

using namespace polychrome;

TEST_CASE("matching numbers")
{
    CHECK(p_f(8, 0).value == 3);
    CHECK(p_f(14, 2).value == 2);
    CHECK(p_f(2, 0).value == 1);
    CHECK_THROWS_AS(p_f(7, 0), precondition_error);  // n-q odd
    CHECK_THROWS_AS(p_f(3, 3), precondition_error);  // n-q zero
}

TEST_CASE("cycle numbers")
{
    CHECK(p_c(19, 2).value == 3);
    CHECK(p_c(19, 2).provenance == Provenance::CycleInterval);
    CHECK(p_c(8, 3).value == 2);  // n-q = 5 odd, 8 in [2q+2, 3q+2]
    CHECK(p_c(8, 3).provenance == Provenance::CycleTwoColoringBand);
    CHECK(p_c(5, 2).value == 2);
    CHECK(p_c(5, 2).provenance == Provenance::CycleQ2N5);
    CHECK(p_c(7, 0).value == 4);
    CHECK(p_c(3, 0).value == 3);
    CHECK(p_c(3, 0).provenance == Provenance::CycleQ0N3Search);
    CHECK(p_c(4, 0).value == 3);
    CHECK(p_c(4, 1).value == 3);
    CHECK(p_c(4, 1).provenance == Provenance::CycleQ1N4Search);
    CHECK(p_c(5, 1).value == 2);
    CHECK(p_c(10, 1).value == 3);
    // even n-q below the two-coloring threshold stays at one color
    CHECK(p_c(8, 2).value == 1);
    CHECK(p_c(9, 2).value == 2);
    CHECK_THROWS_AS(p_c(4, 2), precondition_error);
}

TEST_CASE("two-regular numbers")
{
    CHECK(p_r(7, 0).value == 4);
    CHECK(p_r(3, 0).value == 3);
    CHECK(p_r(10, 1).value == 3);
    CHECK(p_r(4, 1).value == 2);
    CHECK(p_r(14, 2).value == p_f(14, 2).value);
    CHECK(p_r(14, 2).provenance == Provenance::TwoRegularMatching);
    CHECK_THROWS_AS(p_r(2, 0), precondition_error);
}

TEST_CASE("classical cycle Ramsey numbers")
{
    CHECK(classical_c(3).value == 6);
    CHECK(classical_c(4).value == 6);
    CHECK(classical_c(5).value == 9);
    CHECK(classical_c(6).value == 8);
    CHECK(classical_c(7).value == 13);
    CHECK(classical_c(8).value == 11);
    CHECK_THROWS_AS(classical_c(2), precondition_error);
}

TEST_CASE("polychromatic cyclic Ramsey numbers")
{
    CHECK(pr_t(17, 3).value == 20);  // round(15/6) = round(2.5) rounds up to 3
    CHECK(pr_t(5, 4).value == 5);
    CHECK(pr_t(10, 3).value == 12);
    CHECK(pr_t(6, 2).value == 8);  // delegation to the classical number
    CHECK(pr_t(6, 2).provenance == Provenance::RamseyDelegate);
    CHECK(pr_t(3, 3).value == 5);
    CHECK(pr_t(4, 3).value == 5);
    CHECK(pr_t(8, 3).value == 9);
    CHECK(pr_t(9, 3).value == 11);
    CHECK(pr_t(16, 3).value == 18);
    // half-up rounding boundary: s = 20, t = 3 gives exactly 3 = 18/6
    CHECK(pr_t(20, 3).value == 23);
    CHECK_THROWS_AS(pr_t(3, 4), precondition_error);  // needs s >= t
}

TEST_CASE("cross-module consistency of the Ramsey formula")
{
    CHECK(pr_consistency(17, 3));
    CHECK(pr_consistency(40, 3));
    CHECK(pr_consistency(6, 2));
    CHECK(pr_consistency(5, 2));
    CHECK(pr_consistency(3, 3));
}

TEST_CASE("interval search equals the rational floor-log form")
{
    // floor(log2(a/b)) as the largest k with 2^k * b <= a
    auto floor_log2 = [](int64_t a, int64_t b) {
        int64_t k = 0;
        while ((int64_t{2} << k) * b <= a) ++k;
        return k;
    };
    for (int64_t q = 0; q <= 20; ++q)
        for (int64_t n : {5, 17, 63, 64, 65, 1023, 1024, 4097, 99999, 1000000}) {
            if (n - q >= 2 && (n - q) % 2 == 0)
                CHECK(p_f(n, q).value == floor_log2(n + q + 1, q + 1));
            if (q >= 2 && n - q >= 3) {
                auto pc = p_c(n, q);
                if (pc.provenance == Provenance::CycleInterval)
                    CHECK(pc.value == floor_log2(2 * (n + q - 1), 2 * q + 1));
            }
        }
    for (int64_t n = 4; n <= 1000000; n = n * 3 / 2 + 1) {
        CHECK(p_c(n, 0).value == floor_log2(8 * (n - 1), 3));
        if (n >= 5) CHECK(p_c(n, 1).value == floor_log2(4 * n, 5));
        CHECK(p_r(n, 0).value == 1 + floor_log2(n + 1, 1));
        CHECK(p_r(n, 1).value == floor_log2(2 * (n + 2), 3));
    }
}

TEST_CASE("monotonicity over formula-backed ranges")
{
    for (int64_t q = 0; q <= 6; ++q) {
        // matchings step by 2 to keep n-q even
        for (int64_t n = q + 2; n + 2 <= 200; n += 2)
            CHECK(p_f(n, q).value <= p_f(n + 2, q).value);
        // two-regular families are monotone from their validity start
        int64_t r_start = q == 0 ? 3 : (q == 1 ? 4 : q + 3);
        for (int64_t n = r_start; n + 1 <= 200; ++n)
            CHECK(p_r(n, q).value <= p_r(n + 1, q).value);
        // cycles: monotone once past the alternating two-coloring band
        int64_t c_start = q == 0 ? 3 : (q == 1 ? 5 : 3 * q + 3);
        for (int64_t n = c_start; n + 1 <= 200; ++n)
            CHECK(p_c(n, q).value <= p_c(n + 1, q).value);
    }
}
