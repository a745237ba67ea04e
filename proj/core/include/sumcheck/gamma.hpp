#pragma once

namespace sumcheck {

// log Gamma(x) for x > 0.
double log_gamma(double x);

// psi(x) for real x off the poles at 0, -1, -2, ...
double digamma(double x);

// psi'(x), x > 0.
double trigamma(double x);

// psi^(m)(x) for m >= 0, x > 0.
double polygamma(int m, double x);

// psi(x+1) + gamma: equals H_n at integer x = n, smooth in between.
double harmonic_smooth(double x);

// 1/(e^x - 1) - 1/x for x > 0, stable near 0 where both pieces blow up.
// Shows up as the weight in most of the half-line integrals here.
double binet_kernel(double x);

// beta(x) = sum_{n>=0} (-1)^n/(n+x) = psi(x) - psi(x/2) - log 2, x > 0.
// beta(1) = log 2, beta(1/2) = pi/2, beta(1+x) = 1/x - beta(x).
double nielsen_beta(double x);

// xi(u) = sum_{n>=1} H_n (1/(u+n) - 1/(n+1))
//       = (psi'(u) - zeta(2) - [psi(u)+gamma]^2) / 2, u > 0.
// xi(1) = 0, xi(2) = -1, xi'(1) = -zeta(3).
double nielsen_xi(double u);

} // namespace sumcheck
