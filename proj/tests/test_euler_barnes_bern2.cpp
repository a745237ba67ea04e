#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumcheck/euler_const.hpp"
#include "sumcheck/barnes.hpp"
#include "sumcheck/bern2.hpp"
#include "sumcheck/constants.hpp"

#include "reference_values.hpp"

#include <cmath>
#include <numbers>

using namespace sumcheck;

namespace {
constexpr double kLn2 = std::numbers::ln2;
} // namespace

TEST_CASE("generalized Euler constant at the endpoints") {
    CHECK(euler_gen(1.0) == doctest::Approx(ref::euler).epsilon(1e-13));
    CHECK(euler_gen(-1.0) == doctest::Approx(ref::log_4_over_pi).epsilon(1e-13));
    CHECK(euler_gen(0.0) == doctest::Approx(1.0 - kLn2).epsilon(1e-14));
}

TEST_CASE("first Stieltjes constant, shifted") {
    CHECK(stieltjes_gamma1(1.0) == doctest::Approx(ref::stieltjes1).epsilon(1e-13));
    CHECK(stieltjes_gamma1(0.5) == doctest::Approx(ref::stieltjes1_half).epsilon(1e-13));
    CHECK(stieltjes_gamma1(0.25) == doctest::Approx(ref::stieltjes1_quarter).epsilon(1e-13));
    // Pulling off the leading term shifts the argument by one:
    // gamma_1(a) = gamma_1(a+1) + log(a)/a.
    for (double a : {0.5, 1.5, 3.0}) {
        CHECK(stieltjes_gamma1(a) ==
              doctest::Approx(stieltjes_gamma1(a + 1.0) + std::log(a) / a).epsilon(1e-12));
    }
}

TEST_CASE("phi ties the shifted Stieltjes constant to closed forms") {
    CHECK(ramanujan_phi(1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    double expect = kLn2 * kLn2 + 2.0 * ref::euler * kLn2;
    CHECK(ramanujan_phi(-0.5) == doctest::Approx(expect).epsilon(1e-13));
    // phi(x) = gamma_1 - gamma_1(1+x) on (-1, 0].
    for (double x : {-0.75, -0.25, 0.0}) {
        CHECK(ramanujan_phi(x) ==
              doctest::Approx(ref::stieltjes1 - stieltjes_gamma1(1.0 + x)).epsilon(1e-12));
    }
}

TEST_CASE("log Barnes G at half-integers") {
    CHECK(log_barnes_g(1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    CHECK(log_barnes_g(2.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    CHECK(log_barnes_g(0.5) == doctest::Approx(ref::log_barnes_half).epsilon(1e-13));
    CHECK(log_barnes_g(1.5) == doctest::Approx(ref::log_barnes_3_halves).epsilon(1e-13));
    CHECK(log_barnes_g(3.5) == doctest::Approx(ref::log_barnes_7_halves).epsilon(1e-13));
    // G(4) = 1! 2! = 2.
    CHECK(log_barnes_g(4.0) == doctest::Approx(kLn2).epsilon(1e-13));
}

TEST_CASE("Cauchy coefficients: exact small cases") {
    // b_n = n! c_n: 1, 1/2, -1/6, 1/4, -19/30, 9/4, ...
    CHECK(cauchy_coeff(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cauchy_coeff(1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cauchy_coeff(2) * 2.0 == doctest::Approx(ref::cauchy_b2).epsilon(1e-14));
    CHECK(cauchy_coeff(3) * 6.0 == doctest::Approx(ref::cauchy_b3).epsilon(1e-14));
    CHECK(cauchy_coeff(4) * 24.0 == doctest::Approx(ref::cauchy_b4).epsilon(1e-14));
    CHECK(cauchy_coeff(5) * 120.0 == doctest::Approx(ref::cauchy_b5).epsilon(1e-14));
    CHECK(cauchy_coeff(6) * 720.0 == doctest::Approx(ref::cauchy_b6).epsilon(1e-13));
    CHECK(cauchy_coeff(7) * 5040.0 == doctest::Approx(ref::cauchy_b7).epsilon(1e-13));
    CHECK(cauchy_coeff(8) * 40320.0 == doctest::Approx(ref::cauchy_b8).epsilon(1e-13));
    CHECK(cauchy_table_size() >= 4096);
}

TEST_CASE("smooth continuation matches |c_n| at the integers") {
    for (int n : {2, 5, 10, 100}) {
        double exact = std::fabs(cauchy_coeff(n));
        CHECK(cauchy_abs_smooth(double(n)) == doctest::Approx(exact).epsilon(1e-12));
    }
    // And decays monotonically in between.
    CHECK(cauchy_abs_smooth(10.5) < cauchy_abs_smooth(10.0));
    CHECK(cauchy_abs_smooth(10.5) > cauchy_abs_smooth(11.0));
}

TEST_CASE("alternating binomial log moments") {
    CHECK(binomial_log_moment(1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(binomial_log_moment(2) == doctest::Approx(ln2).epsilon(1e-14));
    // L_3 = 3 log 2 - log 3 from C(3,m)(-1)^m log m.
    double l3 = 3.0 * std::log(2.0) - std::log(3.0);
    CHECK(binomial_log_moment(3) == doctest::Approx(l3).epsilon(1e-13));
    // Exact evaluation and the integral continuation overlap near the
    // switchover at n = 30.
    for (long n = 28; n <= 32; ++n) {
        CHECK(binomial_log_moment(n) ==
              doctest::Approx(binomial_log_moment_smooth(double(n))).epsilon(5e-7));
    }
}
