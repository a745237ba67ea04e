#pragma once

namespace sumcheck {

// gamma(x) = sum_{n>=1} x^{n-1} [1/n - log(1+1/n)] for -1 <= x <= 1.
// gamma(1) is Euler's constant, gamma(-1) = log(4/pi), gamma(0) = 1 - log 2.
double euler_gen(double x);

// gamma_1(a): the linear Laurent coefficient of zeta(s,a) about s = 1,
// by Euler-Maclaurin with exact derivatives of log(t+a)/(t+a). a > 0.
double stieltjes_gamma1(double a);

// phi(x) = sum_{n>=1} [log n / n - log(n+x)/(n+x)], x > -1.
double ramanujan_phi(double x);

} // namespace sumcheck
