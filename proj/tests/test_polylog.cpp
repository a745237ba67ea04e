#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumcheck/polylog.hpp"
#include "sumcheck/constants.hpp"

#include "reference_values.hpp"

#include <cmath>
#include <numbers>

using namespace sumcheck;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
} // namespace

TEST_CASE("dilogarithm closed forms") {
    CHECK(polylog(2, 1.0) == doctest::Approx(ref::zeta2).epsilon(1e-14));
    CHECK(polylog(2, -1.0) == doctest::Approx(-ref::zeta2 / 2.0).epsilon(1e-14));
    CHECK(polylog(2, 0.5) ==
          doctest::Approx(kPi * kPi / 12.0 - 0.5 * kLn2 * kLn2).epsilon(1e-14));
}

TEST_CASE("trilogarithm closed forms") {
    CHECK(polylog(3, 1.0) == doctest::Approx(ref::zeta3).epsilon(1e-14));
    CHECK(polylog(3, -1.0) == doctest::Approx(-0.75 * ref::zeta3).epsilon(1e-14));
    double li3_half = 7.0 * ref::zeta3 / 8.0 - kPi * kPi * kLn2 / 12.0 +
                      kLn2 * kLn2 * kLn2 / 6.0;
    CHECK(polylog(3, 0.5) == doctest::Approx(li3_half).epsilon(1e-14));
}

TEST_CASE("Li_1 is the plain logarithm") {
    for (double x : {-2.0, -0.5, 0.3, 0.9}) {
        CHECK(polylog(1, x) == doctest::Approx(-std::log1p(-x)).epsilon(1e-14));
    }
}

TEST_CASE("dilogarithm reflection") {
    // Li2(x) + Li2(1-x) = zeta(2) - log x log(1-x)
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.93}) {
        double lhs = polylog(2, x) + polylog(2, 1.0 - x);
        double rhs = ref::zeta2 - std::log(x) * std::log1p(-x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("dilogarithm inversion for large negative arguments") {
    // Li2(-1/z) + Li2(-z) = -zeta(2) - log^2(z) / 2
    for (double z : {2.0, 5.0, 40.0}) {
        double lhs = polylog(2, -1.0 / z) + polylog(2, -z);
        double rhs = -ref::zeta2 - 0.5 * std::log(z) * std::log(z);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
}

TEST_CASE("high order polylog approaches x") {
    CHECK(polylog(12, 0.25) == doctest::Approx(0.25).epsilon(1e-3));
    CHECK(polylog(12, 0.25) > 0.25); // every extra term is positive here
}
