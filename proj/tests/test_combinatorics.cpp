#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumcheck/combinatorics.hpp"

#include <cmath>
#include <vector>

using namespace sumcheck;

TEST_CASE("harmonic numbers, plain and generalized") {
    CHECK(harmonic(0) == 0.0);
    CHECK(harmonic(1) == 1.0);
    CHECK(harmonic(4) == doctest::Approx(25.0 / 12.0).epsilon(1e-15));
    CHECK(harmonic(3, 2) == doctest::Approx(1.0 + 0.25 + 1.0 / 9.0).epsilon(1e-15));
    CHECK(harmonic(2, 3) == doctest::Approx(1.125).epsilon(1e-15));
}

TEST_CASE("harmonic_offset sums shifted reciprocal powers") {
    // sum_{j=0}^{2} (j + 0.5)^{-2} = 4 + 4/9 + 4/25
    CHECK(harmonic_offset(3, 2, 0.5) ==
          doctest::Approx(4.0 + 4.0 / 9.0 + 4.0 / 25.0).epsilon(1e-15));
    CHECK(harmonic_offset(0, 2, 0.5) == 0.0);
    // Offset 1 reduces to the generalized harmonic number.
    CHECK(harmonic_offset(5, 3, 1.0) == doctest::Approx(harmonic(5, 3)).epsilon(1e-15));
}

TEST_CASE("stirling numbers of the first kind") {
    // Row n=5 of the signed triangle: 24, -50, 35, -10, 1.
    CHECK(stirling1_exact(5, 1) == 24);
    CHECK(stirling1_exact(5, 2) == -50);
    CHECK(stirling1_exact(5, 3) == 35);
    CHECK(stirling1_exact(5, 4) == -10);
    CHECK(stirling1_exact(5, 5) == 1);
    CHECK(stirling1_exact(6, 3) == -225);
    // Edge behavior.
    CHECK(stirling1_exact(0, 0) == 1);
    CHECK(stirling1_exact(4, 0) == 0);
    // The double-precision table agrees where both exist.
    CHECK(stirling1(12, 5) == doctest::Approx(double(stirling1_exact(12, 5))).epsilon(1e-15));
    // And extends beyond int64 range without overflowing.
    CHECK(std::isfinite(stirling1(100, 3)));
}

TEST_CASE("binomials and factorials") {
    CHECK(binomial(10, 3) == doctest::Approx(120.0).epsilon(1e-15));
    CHECK(binomial(40, 20) == doctest::Approx(137846528820.0).epsilon(1e-12));
    CHECK(factorial(5) == doctest::Approx(120.0).epsilon(1e-15));
    CHECK(factorial(170) > 7e306); // largest finite one
    CHECK(log_factorial(100) == doctest::Approx(363.7393755555634901441).epsilon(1e-14));
}

TEST_CASE("complete Bell polynomials by hand") {
    // Y_1 = x1; Y_2 = x1^2 + x2; Y_3 = x1^3 + 3 x1 x2 + x3.
    std::vector<double> xs = {2.0, 3.0, 5.0};
    CHECK(bell_complete(0, xs) == 1.0);
    CHECK(bell_complete(1, xs) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(bell_complete(2, xs) == doctest::Approx(4.0 + 3.0).epsilon(1e-15));
    CHECK(bell_complete(3, xs) == doctest::Approx(8.0 + 18.0 + 5.0).epsilon(1e-15));

    auto all = bell_complete_all(3, xs);
    REQUIRE(all.size() == 4);
    CHECK(all[0] == 1.0);
    CHECK(all[3] == doctest::Approx(31.0).epsilon(1e-15));

    // Setting x_i = 1 for all i produces the Bell numbers 1, 1, 2, 5, 15, 52.
    std::vector<double> ones = {1.0, 1.0, 1.0, 1.0, 1.0};
    auto bells = bell_complete_all(5, ones);
    CHECK(bells[2] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(bells[3] == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(bells[4] == doctest::Approx(15.0).epsilon(1e-14));
    CHECK(bells[5] == doctest::Approx(52.0).epsilon(1e-14));
}
