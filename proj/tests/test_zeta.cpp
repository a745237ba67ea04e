#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumcheck/zeta.hpp"
#include "sumcheck/constants.hpp"

#include "reference_values.hpp"

#include <cmath>
#include <numbers>

using namespace sumcheck;

TEST_CASE("riemann zeta at small integer arguments") {
    CHECK(riemann_zeta(2.0) == doctest::Approx(ref::zeta2).epsilon(1e-15));
    CHECK(riemann_zeta(3.0) == doctest::Approx(ref::zeta3).epsilon(1e-15));
    CHECK(riemann_zeta(4.0) ==
          doctest::Approx(std::pow(std::numbers::pi, 4) / 90.0).epsilon(1e-15));
    // Large s converges to 1 fast.
    CHECK(riemann_zeta(50.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("riemann zeta below 1 via reflection") {
    CHECK(riemann_zeta(0.0) == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(riemann_zeta(-1.0) == doctest::Approx(-1.0 / 12.0).epsilon(1e-13));
    CHECK(riemann_zeta(-3.0) == doctest::Approx(1.0 / 120.0).epsilon(1e-13));
    CHECK(riemann_zeta(0.5) == doctest::Approx(-1.460354508809586812889499).epsilon(1e-13));
}

TEST_CASE("hurwitz zeta special points") {
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    for (double s : {2.0, 3.0, 4.5}) {
        double expect = (std::pow(2.0, s) - 1.0) * riemann_zeta(s);
        CHECK(hurwitz_zeta(s, 0.5) == doctest::Approx(expect).epsilon(1e-13));
    }
    // zeta(s, 1) is the plain zeta function.
    CHECK(hurwitz_zeta(3.0, 1.0) == doctest::Approx(ref::zeta3).epsilon(1e-14));
    // zeta(s, 2) = zeta(s) - 1
    CHECK(hurwitz_zeta(2.0, 2.0) == doctest::Approx(ref::zeta2 - 1.0).epsilon(1e-13));
}

TEST_CASE("zeta derivative against frozen references") {
    CHECK(riemann_zeta_prime(2.0) == doctest::Approx(ref::zeta_prime2).epsilon(1e-12));
    CHECK(riemann_zeta_prime(3.0) == doctest::Approx(ref::zeta_prime3).epsilon(1e-12));
    CHECK(riemann_zeta_prime(4.0) == doctest::Approx(ref::zeta_prime4).epsilon(1e-12));
}

TEST_CASE("alternating zeta ties back to zeta") {
    // eta(s) = (1 - 2^{1-s}) zeta(s)
    for (double s : {1.5, 2.0, 3.0, 6.0}) {
        double expect = (1.0 - std::pow(2.0, 1.0 - s)) * riemann_zeta(s);
        CHECK(alt_zeta(s) == doctest::Approx(expect).epsilon(1e-13));
    }
    // eta(1) = log 2
    CHECK(alt_zeta(1.0) == doctest::Approx(std::numbers::ln2).epsilon(1e-13));
}

TEST_CASE("even-index bernoulli numbers") {
    CHECK(bernoulli_even(1) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(bernoulli_even(2) == doctest::Approx(-1.0 / 30.0).epsilon(1e-15));
    CHECK(bernoulli_even(3) == doctest::Approx(1.0 / 42.0).epsilon(1e-15));
    CHECK(bernoulli_even(7) == doctest::Approx(7.0 / 6.0).epsilon(1e-15));
}
