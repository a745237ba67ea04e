#pragma once

namespace sumcheck {

// zeta(s), s != 1. Negative s goes through the functional equation.
double riemann_zeta(double s);

// zeta(s, a) = sum (k+a)^{-s}, s != 1, a > 0.
double hurwitz_zeta(double s, double a);

// zeta'(s) for s > 1.
double riemann_zeta_prime(double s);

// eta(s) = (1 - 2^{1-s}) zeta(s); the s -> 1 limit gives log 2.
double alt_zeta(double s);

// B_{2k} for 0 <= k <= 17 (B_0 = 1 up to B_34).
double bernoulli_even(int k);

} // namespace sumcheck
