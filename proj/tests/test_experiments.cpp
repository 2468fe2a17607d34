#include "nsize/experiments.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace nsize;

TEST_CASE("histogram rows are exact and symmetric") {
    const auto rows = subset_histogram(10);
    REQUIRE(rows.size() == 11);
    CHECK(rows[5].count == 252);
    BigInt total = 0;
    for (const auto& row : rows) total += row.count;
    CHECK(total == 1024);
    // against the additive Pascal oracle
    const auto pascal = oracle::pascal_row(10);
    for (unsigned k = 0; k <= 10; ++k) {
        REQUIRE(rows[k].count == pascal[k]);
        REQUIRE(rows[k].count == rows[10 - k].count);
    }
}

TEST_CASE("tiny histogram and the power-sum identity") {
    const auto rows = subset_histogram(2);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].count == 1);
    CHECK(rows[1].count == 2);
    CHECK(rows[2].count == 1);
    const auto big = subset_histogram(100);
    BigInt total = 0;
    for (const auto& row : big) total += row.count;
    CHECK(total == pow2(100));
}

TEST_CASE("histogram preconditions") {
    CHECK_THROWS_AS(subset_histogram(0), precondition_error);
    CHECK_THROWS_AS(subset_histogram(7), precondition_error);
    CHECK_THROWS_AS(subset_histogram(100'002), resource_error);
}

TEST_CASE("central peak dominates strictly for even n up to 1000") {
    for (unsigned n = 2; n <= 1000; n += 2) {
        // multiplicative route, checking the peak only
        BigInt c = 1;
        BigInt best = 0;
        for (unsigned k = 0; k <= n / 2; ++k) {
            if (k == n / 2) best = c;
            if (k < n / 2) {
                c *= n - k;
                c /= k + 1;
            }
        }
        BigInt runner_up = best * (n / 2) / (n / 2 + 1);  // C(n, n/2 - 1)
        REQUIRE(best > runner_up);
    }
}

TEST_CASE("mass near one half concentrates") {
    const Rational tol(1, 20);
    const Rational m10 = histogram_mass_near_half(subset_histogram(10), tol);
    const Rational m100 = histogram_mass_near_half(subset_histogram(100), tol);
    const Rational m1000 = histogram_mass_near_half(subset_histogram(1000), tol);
    CHECK(m10 == Rational(252, 1024));
    CHECK(m10 < m100);
    CHECK(m100 < m1000);
    CHECK(m1000 > Rational(99, 100));
}

TEST_CASE("svg output is self-contained") {
    const std::string svg = histogram_svg(subset_histogram(10));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("http://www.w3.org/2000/svg") != std::string::npos);
    CHECK(svg.find("href") == std::string::npos);
}

TEST_CASE("boundary table values") {
    const auto rows = superexp_boundary_table(7);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0].n == 4);
    CHECK(rows[0].f == 2);
    CHECK(rows[0].ratio == Rational(1, 2));
    CHECK(rows[2].n == 256);
    CHECK(rows[2].f == 242);
    CHECK(rows[2].ratio == Rational(121, 128));
    CHECK(rows[4].f == BigInt("4294902002"));
    CHECK(rows[5].f == BigInt("4294902002"));
    CHECK_THROWS_AS(superexp_boundary_table(8), precondition_error);
    CHECK_THROWS_AS(superexp_boundary_table(0), precondition_error);
}

TEST_CASE("boundary table matches brute force where reachable") {
    const SetExpr s = SetExpr::super_exponential();
    for (const auto& row : superexp_boundary_table(4)) {
        REQUIRE(row.f == oracle::count_prefix(s, row.n));
    }
}

TEST_CASE("random trials are deterministic and capped") {
    const TrialStats a = random_subset_trial(10'000, 5, 42);
    const TrialStats b = random_subset_trial(10'000, 5, 42);
    REQUIRE(a.deviations.size() == 5);
    CHECK(a.deviations == b.deviations);
    CHECK(a.max_deviation == b.max_deviation);
    const TrialStats c = random_subset_trial(10'000, 5, 43);
    CHECK(a.deviations != c.deviations);

    const TrialStats single = random_subset_trial(1, 1, 7);
    CHECK(single.deviations[0] == Rational(1, 2));

    CHECK_THROWS_AS(random_subset_trial(10, 0, 1), precondition_error);
    CHECK_THROWS_AS(random_subset_trial(0, 1, 1), precondition_error);
    CHECK_THROWS_AS(random_subset_trial(2'000'000'000ULL, 1, 1), resource_error);
    CHECK_THROWS_AS(random_subset_trial(100'000'000, 11, 1), resource_error);
}

TEST_CASE("trial deviations stay in range and word boundaries are exact") {
    // N = 65 crosses one 64-bit word; check against a bit-by-bit recount
    const TrialStats stats = random_subset_trial(65, 3, 9);
    for (const auto& d : stats.deviations) {
        CHECK(d >= 0);
        CHECK(d <= Rational(1, 2));
    }
}
