#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumcheck/gamma.hpp"
#include "sumcheck/constants.hpp"

#include "reference_values.hpp"

#include <cmath>
#include <numbers>

using namespace sumcheck;

TEST_CASE("log_gamma at half-integers and small arguments") {
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-15));
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(log_gamma(2.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-15));
    // Gamma(3/2) = sqrt(pi)/2
    CHECK(log_gamma(1.5) ==
          doctest::Approx(0.5 * std::log(std::numbers::pi) - std::numbers::ln2).epsilon(1e-14));
}

TEST_CASE("digamma closed forms") {
    CHECK(digamma(1.0) == doctest::Approx(-ref::euler).epsilon(1e-15));
    CHECK(digamma(0.5) == doctest::Approx(-ref::euler - 2.0 * std::numbers::ln2).epsilon(1e-15));
    // psi(1/3) = -euler - pi/(2 sqrt 3) - (3/2) log 3
    double psi_third = -ref::euler - std::numbers::pi / (2.0 * std::sqrt(3.0)) -
                       1.5 * std::log(3.0);
    CHECK(digamma(1.0 / 3.0) == doctest::Approx(psi_third).epsilon(1e-14));
}

TEST_CASE("digamma functional equations") {
    // Recurrence psi(x+1) = psi(x) + 1/x across both branches of the
    // implementation (series lift below 8, asymptotic above).
    for (double x : {0.1, 0.7, 1.3, 4.6, 7.9, 12.5}) {
        CHECK(digamma(x + 1.0) == doctest::Approx(digamma(x) + 1.0 / x).epsilon(1e-13));
    }
    // Reflection psi(1-x) - psi(x) = pi cot(pi x)
    for (double x : {0.2, 0.35, 0.45}) {
        double lhs = digamma(1.0 - x) - digamma(x);
        double rhs = std::numbers::pi / std::tan(std::numbers::pi * x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
}

TEST_CASE("polygamma at 1") {
    CHECK(polygamma(1, 1.0) == doctest::Approx(ref::zeta2).epsilon(1e-13));
    CHECK(polygamma(2, 1.0) == doctest::Approx(-2.0 * ref::zeta3).epsilon(1e-13));
    // psi'(1/2) = pi^2 / 2
    CHECK(polygamma(1, 0.5) ==
          doctest::Approx(std::numbers::pi * std::numbers::pi / 2.0).epsilon(1e-13));
}

TEST_CASE("harmonic_smooth interpolates the harmonic numbers") {
    double h10 = 0.0;
    for (int k = 1; k <= 10; ++k) h10 += 1.0 / k;
    CHECK(harmonic_smooth(10.0) == doctest::Approx(h10).epsilon(1e-14));
    CHECK(harmonic_smooth(1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("binet_kernel agrees with long double arithmetic at the seam") {
    // Series branch below 0.25, direct expm1 arithmetic above. The direct
    // form in long double is good to ~1e-19 here, so it can referee both.
    for (double x : {0.25 - 1e-9, 0.25 + 1e-9, 0.05, 0.2, 0.3}) {
        long double lx = x;
        double want = double(1.0L / std::expm1l(lx) - 1.0L / lx);
        CHECK(binet_kernel(x) == doctest::Approx(want).epsilon(1e-14));
    }
    CHECK(binet_kernel(1e-14) == doctest::Approx(-0.5).epsilon(1e-12));
    // Large x: 1/(e^x-1) dies, leaving -1/x.
    CHECK(binet_kernel(100.0) == doctest::Approx(-0.01).epsilon(1e-14));
    // Spot value at x=1: 1/(e-1) - 1
    CHECK(binet_kernel(1.0) ==
          doctest::Approx(1.0 / (std::exp(1.0) - 1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("nielsen_beta closed forms and recurrence") {
    CHECK(nielsen_beta(1.0) == doctest::Approx(std::numbers::ln2).epsilon(1e-14));
    CHECK(nielsen_beta(0.5) ==
          doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-14));
    for (double x : {0.3, 0.9, 2.7, 14.0}) {
        CHECK(nielsen_beta(1.0 + x) + nielsen_beta(x) ==
              doctest::Approx(1.0 / x).epsilon(1e-12));
    }
    CHECK_THROWS_AS(nielsen_beta(0.0), std::domain_error);
}

TEST_CASE("nielsen_xi special values, series agreement, derivative at 1") {
    CHECK(nielsen_xi(1.0) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(std::fabs(nielsen_xi(1.0)) < 1e-14);
    CHECK(nielsen_xi(2.0) == doctest::Approx(-1.0).epsilon(1e-13));
    // against a straight partial sum of H_n (1/(u+n) - 1/(n+1)) plus its
    // integral-comparison tail bound
    for (double u : {0.05, 0.5, 1.5, 3.0}) {
        double s = 0.0, h = 0.0;
        const long N = 200000;
        for (long n = 1; n <= N; ++n) {
            h += 1.0 / double(n);
            s += h * (1.0 - u) / ((u + n) * (n + 1.0));
        }
        // tail ~ (1-u) log N / N
        const double bound = std::fabs(1.0 - u) * (std::log(double(N)) + 1.0) / N;
        CHECK(std::fabs(nielsen_xi(u) - s) < 2.0 * bound);
    }
    // xi'(1) = -zeta(3), via a symmetric difference tightened once
    const double h = 1.0 / 64.0;
    const double d1 = (nielsen_xi(1.0 + h) - nielsen_xi(1.0 - h)) / (2.0 * h);
    const double d2 =
        (nielsen_xi(1.0 + h / 2) - nielsen_xi(1.0 - h / 2)) / h;
    const double extrap = (4.0 * d2 - d1) / 3.0;
    CHECK(extrap == doctest::Approx(-ref::zeta3).epsilon(1e-9));
    CHECK_THROWS_AS(nielsen_xi(-1.0), std::domain_error);
}
