#include "sumcheck/gamma.hpp"

#include <cmath>
#include <stdexcept>

#include "sumcheck/constants.hpp"
#include "sumcheck/zeta.hpp"

namespace sumcheck {

namespace {

// Lanczos approximation, g = 607/128, 15 terms. Relative error ~1e-15 over
// the right half-plane; coefficients are the classic Godfrey set.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Asymptotic psi(x) ~ log x - 1/(2x) - sum B_{2k}/(2k x^{2k}), good for x >= 8.
double digamma_asymptotic(double x) {
  const double inv2 = 1.0 / (x * x);
  // B_2/2, B_4/4, ... B_14/14 over x^{2k}
  const double series =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 -
                                      inv2 * (1.0 / 132.0 -
                                              inv2 * (691.0 / 32760.0 -
                                                      inv2 * (1.0 / 12.0)))))));
  return std::log(x) - 0.5 / x - series;
}

} // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  if (x < 0.5) {
    // Reflection keeps the Lanczos argument away from 0.
    return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 15; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

double digamma(double x) {
  if (x <= 0.0) {
    if (x == std::floor(x)) throw std::domain_error("digamma: pole");
    // psi(x) = psi(1-x) - pi cot(pi x)
    return digamma(1.0 - x) - pi / std::tan(pi * x);
  }
  double acc = 0.0;
  while (x < 8.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  return acc + digamma_asymptotic(x);
}

double trigamma(double x) { return polygamma(1, x); }

double polygamma(int m, double x) {
  if (m < 0) throw std::domain_error("polygamma: m >= 0");
  if (m == 0) return digamma(x);
  // psi^(m)(x) = (-1)^(m+1) m! zeta(m+1, x)
  double fact = 1.0;
  for (int i = 2; i <= m; ++i) fact *= i;
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;
  return sign * fact * hurwitz_zeta(m + 1.0, x);
}

double harmonic_smooth(double x) { return digamma(x + 1.0) + euler; }

double binet_kernel(double x) {
  if (x < 0.25) {
    // Bernoulli-number series; the direct form loses everything to
    // cancellation once 1/(e^x-1) and 1/x both exceed ~1e16.
    const double x2 = x * x;
    double p = x, s = -0.5 + x / 12.0;
    p *= x2;
    s -= p / 720.0;
    p *= x2;
    s += p / 30240.0;
    p *= x2;
    s -= p / 1209600.0;
    p *= x2;
    s += p / 47900160.0;
    return s;
  }
  return 1.0 / std::expm1(x) - 1.0 / x;
}

double nielsen_beta(double x) {
  if (!(x > 0.0)) throw std::domain_error("nielsen_beta: requires x > 0");
  return digamma(x) - digamma(0.5 * x) - ln2;
}

double nielsen_xi(double u) {
  if (!(u > 0.0)) throw std::domain_error("nielsen_xi: requires u > 0");
  if (u >= 0.125) {
    const double p = digamma(u) + euler;
    return 0.5 * (trigamma(u) - zeta2 - p * p);
  }
  // Small u: pull psi(u) = psi(1+u) - 1/u through the square so the 1/u^2
  // poles cancel exactly rather than in floating point. The leftover
  // (psi(1+u)+gamma)/u is the alternating zeta series, which dodges the 0/0.
  double dr = 0.0, up = 1.0;
  for (int n = 2; n <= 24; ++n) {
    const double t = riemann_zeta(double(n)) * up;
    dr += (n % 2 == 0) ? t : -t;
    if (std::fabs(t) < 1e-18 * std::fabs(dr)) break;
    up *= u;
  }
  const double p = u * dr;
  return 0.5 * (trigamma(1.0 + u) - zeta2 - p * p + 2.0 * dr);
}

} // namespace sumcheck
