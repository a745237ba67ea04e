#pragma once

namespace sumcheck {

// Coefficients c_n of x/log(1+x) = sum_n c_n x^n. The Bernoulli numbers of
// the second kind are b_n = n! c_n; signs alternate from n = 2 on and
// |c_n| ~ 1/(n log^2 n).
double cauchy_coeff(int n);
int cauchy_table_size();

// |c_x| continued to real x >= 2 through
//   |c_x| = integral_0^1 t Gamma(x-t) / (Gamma(1-t) Gamma(x+1)) dt,
// which matches |c_n| at the integers and decays smoothly.
double cauchy_abs_smooth(double x);

// L_n = sum_{m=1}^n C(n,m) (-1)^m log m. Alternating binomial sums explode
// in doubles, so beyond n = 30 this switches to the equivalent
//   L_n = integral_0^inf [1 - e^{-t} - (1-e^{-t})^n] / t dt.
double binomial_log_moment(long n);
double binomial_log_moment_smooth(double x);

} // namespace sumcheck
