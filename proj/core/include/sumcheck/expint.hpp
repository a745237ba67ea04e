#pragma once

namespace sumcheck {

// Ei(x), x != 0.
double expint_ei(double x);

// E_1(x), x > 0.
double expint_e1(double x);

// li(x) = Ei(log x) for x in (0,1) or (1,inf).
double log_integral(double x);

// integral_0^inf e^{-x}/(1+x) dx = -e Ei(-1).
double gompertz_constant();

} // namespace sumcheck
