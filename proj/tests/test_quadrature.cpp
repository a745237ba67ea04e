#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumcheck/quadrature.hpp"
#include "sumcheck/gamma.hpp"

#include <cmath>

using namespace sumcheck;

TEST_CASE("smooth integrand on a finite interval") {
    auto q = integrate_finite([](double x) { return std::sin(x); }, 0.0, 1.0);
    CHECK(q.value == doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-14));
    CHECK(std::fabs(q.value - (1.0 - std::cos(1.0))) <= q.err_estimate + 1e-15);
}

TEST_CASE("integrable endpoint singularities") {
    // log x has an integrable blow-up at 0; 1/sqrt(x) is the classic
    // half-power case. Both should come out near machine precision.
    auto qlog = integrate_finite([](double x) { return std::log(x); }, 0.0, 1.0);
    CHECK(qlog.value == doctest::Approx(-1.0).epsilon(1e-13));

    auto qsqrt = integrate_finite([](double x) { return 1.0 / std::sqrt(x); },
                                  0.0, 1.0, 1e-14);
    CHECK(qsqrt.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("endpoint-aware form survives cancellation at the right edge") {
    // f(x) = log(1-x): naive evaluation dies at x near 1 because 1-x
    // rounds to 0. The three-argument form hands the distance to the
    // endpoint straight to the integrand.
    auto q = integrate_finite(
        [](double, double, double to_b) { return std::log(to_b); }, 0.0, 1.0);
    CHECK(q.value == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("half-line integrals with exponential decay") {
    auto q = integrate_half_line([](double x) { return std::exp(-x); }, 0.0, 1.0);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-13));

    // Gamma(3) = 2 with slower decay near 0.
    auto q2 = integrate_half_line(
        [](double x) { return x * x * std::exp(-x); }, 0.0, 1.0);
    CHECK(q2.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("half-line integral with a shifted origin") {
    // int_2^inf e^{-x} dx = e^{-2}
    auto q = integrate_half_line([](double x) { return std::exp(-x); }, 2.0, 1.0);
    CHECK(q.value == doctest::Approx(std::exp(-2.0)).epsilon(1e-13));
}

TEST_CASE("error estimates are honest, not just small") {
    // A few integrands with known exact values: the reported estimate
    // must bound the actual error (with a tiny slack for the exact
    // value's own rounding).
    struct Case {
        double exact;
        QuadOutcome got;
    };
    Case cases[] = {
        {1.0 - std::cos(1.0),
         integrate_finite([](double x) { return std::sin(x); }, 0.0, 1.0)},
        {-1.0, integrate_finite([](double x) { return std::log(x); }, 0.0, 1.0)},
        {std::exp(-2.0),
         integrate_half_line([](double x) { return std::exp(-x); }, 2.0, 1.0)},
        {0.5963473623231940743,
         integrate_half_line([](double x) { return std::exp(-x) / (1.0 + x); },
                             0.0, 1.0)},
    };
    for (const auto& c : cases) {
        CHECK(std::fabs(c.got.value - c.exact) <= c.got.err_estimate + 4e-16);
        CHECK(c.got.err_estimate > 0.0);
    }
}

TEST_CASE("eval counters reflect actual work") {
    auto q = integrate_finite([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(q.evals > 0);
    CHECK(q.levels >= 3);
}
