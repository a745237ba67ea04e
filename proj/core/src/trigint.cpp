#include "sumcheck/trigint.hpp"

#include <cmath>
#include <stdexcept>

#include "sumcheck/constants.hpp"
#include "sumcheck/quadrature.hpp"

namespace sumcheck {

namespace {

// Power series are well conditioned up to x ~ 12 (the largest term is ~1e3,
// so cancellation costs three digits at the far end).
constexpr double kSeriesCut = 12.0;

double si_series(double x) {
  // Si(x) = sum (-1)^n x^{2n+1} / ((2n+1)(2n+1)!)
  double term = x, sum = x;
  for (int n = 1; n <= 60; ++n) {
    term *= -x * x / ((2.0 * n) * (2.0 * n + 1.0));
    const double add = term / (2.0 * n + 1.0);
    sum += add;
    if (std::fabs(add) < 1e-17 * std::fabs(sum)) break;
  }
  return sum - pi / 2.0;
}

double ci_series(double x) {
  // Ci(x) = gamma + log x + sum (-1)^n x^{2n} / ((2n)(2n)!)
  double term = 1.0, sum = 0.0;
  for (int n = 1; n <= 60; ++n) {
    term *= -x * x / ((2.0 * n - 1.0) * (2.0 * n));
    const double add = term / (2.0 * n);
    sum += add;
    if (std::fabs(add) < 1e-17 * (std::fabs(sum) + 1e-30)) break;
  }
  return euler + std::log(x) + sum;
}

} // namespace

double trig_aux_f(double x) {
  if (!(x > 0.0)) throw std::domain_error("trig_aux_f: requires x > 0");
  return integrate_half_line([x](double t) { return std::exp(-x * t) / (1.0 + t * t); },
                             0.0, x, 1e-14).value;
}

double trig_aux_g(double x) {
  if (!(x > 0.0)) throw std::domain_error("trig_aux_g: requires x > 0");
  return integrate_half_line([x](double t) { return t * std::exp(-x * t) / (1.0 + t * t); },
                             0.0, x, 1e-14).value;
}

double cosine_integral(double x) {
  if (!(x > 0.0)) throw std::domain_error("cosine_integral: requires x > 0");
  if (x <= kSeriesCut) return ci_series(x);
  return trig_aux_f(x) * std::sin(x) - trig_aux_g(x) * std::cos(x);
}

double sine_integral_shifted(double x) {
  if (!(x > 0.0)) throw std::domain_error("sine_integral_shifted: requires x > 0");
  if (x <= kSeriesCut) return si_series(x);
  return -trig_aux_f(x) * std::cos(x) - trig_aux_g(x) * std::sin(x);
}

} // namespace sumcheck
