#pragma once

namespace sumcheck {

// Ci(x), x > 0.
double cosine_integral(double x);

// si(x) = Si(x) - pi/2 = -integral_x^inf sin t / t dt, x > 0.
double sine_integral_shifted(double x);

// Laplace-transform auxiliaries, x > 0:
//   trig_aux_f(x) = integral_0^inf e^{-xt}/(1+t^2) dt
//   trig_aux_g(x) = integral_0^inf t e^{-xt}/(1+t^2) dt
// They satisfy si = -f cos - g sin and Ci = f sin - g cos.
double trig_aux_f(double x);
double trig_aux_g(double x);

} // namespace sumcheck
