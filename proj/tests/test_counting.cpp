#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pvlab/counting.hpp"

using namespace pvlab;

TEST_CASE("moment vectors in canonical order") {
    CHECK(moment_vector(1, 2, {3}) == std::vector<Int>{3, 9});
    CHECK(moment_vector(2, 2, {2, 3}) == std::vector<Int>{2, 3, 4, 6, 9});
    CHECK(moment_vector(1, 3, {1}) == std::vector<Int>{1, 1, 1});
    CHECK_THROWS_AS(moment_vector(2, 2, {0, 1}), std::invalid_argument);
}

TEST_CASE("brute oracle frozen values") {
    CHECK(j_brute(2, 1, 2, 3) == 15);
    CHECK(j_brute(1, 2, 2, 2) == 4);
    CHECK(j_brute(2, 1, 2, 4) == 28);
    // Only multiset-equal pairs survive the cubic equation at N = 2:
    // 1+2+2+1 ordered arrangements.
    CHECK(j_brute(2, 1, 3, 2) == 6);
}

TEST_CASE("fold matches the brute oracle on the full small grid") {
    for (int s = 1; s <= 2; ++s)
        for (int d = 1; d <= 2; ++d)
            for (int k = 1; k <= 3; ++k)
                for (long n = 1; n <= 4; ++n) {
                    INFO("s=", s, " d=", d, " k=", k, " N=", n);
                    CHECK(j_count(s, d, k, n) == j_brute(s, d, k, n));
                }
}

TEST_CASE("pair count closed form") {
    for (long n = 1; n <= 24; ++n) CHECK(j_count(2, 1, 2, n) == Int(2 * n * n - n));
    // For d = 1, s = 2, the first two equations already force multiset
    // equality, so extra equations change nothing.
    for (long n = 1; n <= 12; ++n) CHECK(j_count(2, 1, 4, n) == Int(2 * n * n - n));
}

TEST_CASE("mid-size values frozen from an independent enumeration") {
    CHECK(j_count(2, 2, 2, 6) == Int(2556));
    CHECK(j_count(3, 1, 2, 8) == Int(2744));
    CHECK(j_count(2, 2, 3, 5) == Int(1225));
    CHECK(j_count(3, 1, 3, 6) == Int(996));
    CHECK(j_count(2, 3, 2, 3) == Int(1431));
}

TEST_CASE("single summand forces equality") {
    for (int d = 1; d <= 3; ++d)
        for (long n = 1; n <= 6; ++n) {
            Int grid;
            mpz_ui_pow_ui(grid.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(d));
            CHECK(j_count(1, d, 3, n) == grid);
        }
}

TEST_CASE("monotonicity") {
    Int prev(0);
    for (long n = 1; n <= 8; ++n) {
        const Int cur = j_count(2, 1, 3, n);
        CHECK(cur >= prev);
        prev = cur;
    }
    // More equations cannot create solutions.
    for (int k = 1; k <= 4; ++k)
        CHECK(j_count(2, 1, k, 6) >= j_count(2, 1, k + 1, 6));
    CHECK(j_count(2, 2, 2, 4) >= j_count(2, 2, 3, 4));
}

TEST_CASE("thread count does not change the count") {
    const Int expect = j_count(2, 2, 2, 5, 1);
    for (int threads : {2, 3, 4, 8}) CHECK(j_count(2, 2, 2, 5, threads) == expect);
    CHECK(j_count(3, 1, 2, 9, 1) == j_count(3, 1, 2, 9, 4));
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(j_brute(2, 2, 3, 60), TooLargeError);
    CountLimits tight;
    tight.max_table = 10;
    CHECK_THROWS_AS(j_count(2, 2, 2, 4, 1, tight), ResourceGuardError);
}

TEST_CASE("growth report slopes") {
    const auto report = growth_report(2, 1, 2, 64);
    REQUIRE(report.rows.size() == 6);
    CHECK(report.ell == Rat(2));
    for (const auto& row : report.rows) CHECK(row.j == Int(2 * row.n * row.n - row.n));
    // Slopes settle towards 2: by N = 64 the step is within 0.15.
    const auto& last = report.rows.back();
    CHECK(last.n == 64);
    CHECK(std::abs(last.slope - 2.0) < 0.15);
}

TEST_CASE("log2 of big integers") {
    Int big(1);
    for (int i = 0; i < 200; ++i) big *= 2;
    CHECK(log2_int(big) == doctest::Approx(200.0));
    CHECK(log2_int(Int(1024)) == doctest::Approx(10.0));
}
