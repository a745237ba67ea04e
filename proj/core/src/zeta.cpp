#include "sumcheck/zeta.hpp"

#include <cmath>
#include <stdexcept>

#include "sumcheck/constants.hpp"
#include "sumcheck/gamma.hpp"

namespace sumcheck {

namespace {

constexpr int kBernMax = 17; // table holds B_0, B_2, ..., B_34

const double kBernEven[kBernMax + 1] = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
};

// Euler-Maclaurin for zeta(s,a): direct terms until k+a >= 18, then the
// integral, midpoint and B_{2j} corrections. J = 8 leaves ~1e-20 behind for
// the s of interest here.
constexpr int kEmJ = 8;

} // namespace

double bernoulli_even(int k) {
  if (k < 0 || k > kBernMax) throw std::out_of_range("bernoulli_even");
  return kBernEven[k];
}

double hurwitz_zeta(double s, double a) {
  if (s == 1.0) throw std::domain_error("hurwitz_zeta: pole at s = 1");
  if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: requires a > 0");

  long N = 0;
  if (a < 18.0) N = static_cast<long>(std::ceil(18.0 - a));
  const double w = static_cast<double>(N) + a;

  double direct = 0.0;
  for (long k = N - 1; k >= 0; --k)
    direct += std::pow(static_cast<double>(k) + a, -s);

  double result = direct + std::pow(w, 1.0 - s) / (s - 1.0) +
                  0.5 * std::pow(w, -s);

  double poch = s;              // (s)_{2j-1} built incrementally
  double wpow = std::pow(w, -s - 1.0);
  const double w2 = 1.0 / (w * w);
  double fact = 2.0;            // (2j)!
  for (int j = 1; j <= kEmJ; ++j) {
    result += kBernEven[j] / fact * poch * wpow;
    // advance to j+1: multiply (s)_{2j-1} -> (s)_{2j+1}, w^{-s-2j+1} -> ...
    poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    wpow *= w2;
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  return result;
}

double riemann_zeta(double s) {
  if (s == 1.0) throw std::domain_error("riemann_zeta: pole at s = 1");
  if (s >= 0.5) return hurwitz_zeta(s, 1.0);

  // Exact values at the non-positive integers dodge the sin() noise the
  // functional equation would inject there.
  const double r = std::round(s);
  if (std::fabs(s - r) < 1e-12) {
    const long m = static_cast<long>(-r);
    if (m == 0) return -0.5;
    if (m % 2 == 0) return 0.0;                  // trivial zeros
    const int j = static_cast<int>((m + 1) / 2); // zeta(1-2j) = -B_{2j}/(2j)
    if (j <= kBernMax) return -bernoulli_even(j) / (2.0 * j);
  }
  // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  return std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(pi * s / 2.0) *
         std::exp(log_gamma(1.0 - s)) * riemann_zeta(1.0 - s);
}

double riemann_zeta_prime(double s) {
  if (!(s > 1.0)) throw std::domain_error("riemann_zeta_prime: requires s > 1");

  const long N = 18;
  const double w = static_cast<double>(N) + 1.0;
  const double logw = std::log(w);

  double direct = 0.0;
  for (long k = N; k >= 2; --k) {
    const double kk = static_cast<double>(k);
    direct -= std::log(kk) * std::pow(kk, -s);
  }

  const double w1s = std::pow(w, 1.0 - s);
  double result = direct - logw * w1s / (s - 1.0) - w1s / ((s - 1.0) * (s - 1.0)) -
                  0.5 * logw * std::pow(w, -s);

  double poch = s;
  double dpoch_over_poch = 1.0 / s; // sum 1/(s+i), i = 0..2j-2
  double wpow = std::pow(w, -s - 1.0);
  const double w2 = 1.0 / (w * w);
  double fact = 2.0;
  for (int j = 1; j <= kEmJ; ++j) {
    result += kBernEven[j] / fact * poch * wpow * (dpoch_over_poch - logw);
    poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    dpoch_over_poch += 1.0 / (s + 2.0 * j - 1.0) + 1.0 / (s + 2.0 * j);
    wpow *= w2;
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  return result;
}

double alt_zeta(double s) {
  if (s == 1.0) return ln2;
  return (1.0 - std::pow(2.0, 1.0 - s)) * riemann_zeta(s);
}

} // namespace sumcheck
