#include "sumcheck/polylog.hpp"

#include <cmath>
#include <stdexcept>

#include "sumcheck/combinatorics.hpp"
#include "sumcheck/quadrature.hpp"
#include "sumcheck/zeta.hpp"

namespace sumcheck {

namespace {

// Plain power series; fine for |x| <= 1/2 and for x in (-1, -1/2] where the
// signs alternate.
double polylog_series(int n, double x) {
  double sum = 0.0, xp = 1.0;
  for (long k = 1; k <= 200000; ++k) {
    xp *= x;
    const double term = xp / std::pow(static_cast<double>(k), n);
    sum += term;
    if (std::fabs(term) < 1e-18 * (std::fabs(sum) + 1e-30) && k > 8) break;
  }
  return sum;
}

// Expansion around x = 1 in mu = log x:
//   Li_n(e^mu) = sum_{k>=0, k != n-1} zeta(n-k) mu^k / k!
//              + mu^{n-1}/(n-1)! (H_{n-1} - log(-mu)).
// Needs zeta at non-positive integers, which riemann_zeta supplies exactly.
double polylog_log_pullback(int n, double x) {
  const double mu = std::log(x);
  double sum = std::pow(mu, n - 1) / factorial(n - 1) *
               (harmonic(n - 1) - std::log(-mu));
  double mupow = 1.0; // mu^k / k!
  for (int k = 0; k <= 60; ++k) {
    if (k > 0) mupow *= mu / k;
    if (k == n - 1) continue;
    const double term = riemann_zeta(static_cast<double>(n - k)) * mupow;
    sum += term;
    if (k > n + 4 && std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

// For x < -1:  Li_n(x) = (-1)^n/(n-1)! * integral_0^1 log^{n-1} t / (t - 1/x) dt.
double polylog_negative_tail(int n, double x) {
  const double a = -1.0 / x; // in (0,1)
  const auto f = [n, a](double t, double from0, double) {
    const double lt = std::log(t == 0.0 ? from0 : t);
    return std::pow(lt, n - 1) / (t + a);
  };
  const double q = integrate_finite(EndpointAwareFn(f), 0.0, 1.0, 1e-14).value;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * q / factorial(n - 1);
}

} // namespace

double polylog(int n, double x) {
  if (n < 1) throw std::domain_error("polylog: n >= 1");
  if (x > 1.0) throw std::domain_error("polylog: x <= 1");
  if (n == 1) {
    if (x == 1.0) throw std::domain_error("polylog: Li_1(1) diverges");
    return -std::log1p(-x);
  }
  if (x == 1.0) return riemann_zeta(n);
  if (x == -1.0) return -alt_zeta(n);
  if (x < -1.0) return polylog_negative_tail(n, x);
  if (x > 0.5) return polylog_log_pullback(n, x);
  return polylog_series(n, x);
}

} // namespace sumcheck
