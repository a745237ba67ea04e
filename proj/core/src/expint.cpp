#include "sumcheck/expint.hpp"

#include <cmath>
#include <stdexcept>

#include "sumcheck/constants.hpp"

namespace sumcheck {

namespace {

// E_1(y) for y >= 6 by the continued fraction
//   E_1(y) = e^{-y} / (y+1 - 1^2/(y+3 - 2^2/(y+5 - ...)))
// evaluated with the modified Lentz scheme.
double e1_continued_fraction(double y) {
  const double tiny = 1e-300;
  double b = y + 1.0;
  double C = b, D = 0.0, f = b;
  for (int k = 1; k <= 200; ++k) {
    const double a = -static_cast<double>(k) * k;
    b = y + 2.0 * k + 1.0;
    D = b + a * D;
    if (D == 0.0) D = tiny;
    C = b + a / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    const double delta = C * D;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-y) / f;
}

// Ei(x) as gamma + log|x| + sum x^n/(n n!); fine on (-6, 35] away from 0.
double ei_series(double x) {
  double sum = 0.0, term = 1.0;
  for (int n = 1; n <= 400; ++n) {
    term *= x / n;
    const double add = term / n;
    sum += add;
    if (std::fabs(add) < 1e-18 * (std::fabs(sum) + 1e-30) && n > 4) break;
  }
  return euler + std::log(std::fabs(x)) + sum;
}

// Asymptotic Ei(x) ~ e^x/x sum_k k!/x^k for large positive x, truncated at
// its smallest term.
double ei_asymptotic(double x) {
  double sum = 1.0, term = 1.0;
  for (int k = 1; k <= 60; ++k) {
    const double next = term * k / x;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return std::exp(x) / x * sum;
}

} // namespace

double expint_ei(double x) {
  if (x == 0.0) throw std::domain_error("expint_ei: pole at 0");
  if (x < -6.0) return -e1_continued_fraction(-x);
  if (x <= 35.0) return ei_series(x);
  return ei_asymptotic(x);
}

double expint_e1(double x) {
  if (!(x > 0.0)) throw std::domain_error("expint_e1: requires x > 0");
  if (x >= 6.0) return e1_continued_fraction(x);
  return -ei_series(-x);
}

double log_integral(double x) {
  if (!(x > 0.0) || x == 1.0) throw std::domain_error("log_integral: x in (0,1) or (1,inf)");
  return expint_ei(std::log(x));
}

double gompertz_constant() {
  static const double g = -std::exp(1.0) * expint_ei(-1.0);
  return g;
}

} // namespace sumcheck
