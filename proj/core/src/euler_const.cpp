#include "sumcheck/euler_const.hpp"

#include <cmath>
#include <stdexcept>

#include "sumcheck/constants.hpp"
#include "sumcheck/series.hpp"
#include "sumcheck/zeta.hpp"

namespace sumcheck {

namespace {

double gen_term(double n) { return 1.0 / n - std::log1p(1.0 / n); }

} // namespace

double euler_gen(double x) {
  if (x < -1.0 || x > 1.0) throw std::domain_error("euler_gen: |x| <= 1");
  if (x == 1.0) {
    const auto term = [](long n) { return gen_term(static_cast<double>(n)); };
    const auto density = [](double t) { return gen_term(t); };
    return sum_monotone_em(term, density, 1, 2000).value;
  }
  if (x == -1.0) {
    const auto a = [](long n) { return gen_term(static_cast<double>(n)); };
    return sum_alternating(a, 1, 64).value;
  }
  double sum = 0.0, xp = 1.0;
  for (long n = 1; n <= 40000; ++n) {
    const double term = xp * gen_term(static_cast<double>(n));
    sum += term;
    xp *= x;
    if (std::fabs(xp) / (2.0 * static_cast<double>(n) * n) < 1e-19 * std::fabs(sum))
      break;
  }
  return sum;
}

double stieltjes_gamma1(double a) {
  if (!(a > 0.0)) throw std::domain_error("stieltjes_gamma1: requires a > 0");

  // Direct terms log(k+a)/(k+a) up to M+a ~ 100, then Euler-Maclaurin with
  // the exact derivatives of F(t) = log(t+a)/(t+a):
  //   F^(k)(t) = (c_k log(t+a) + d_k)/(t+a)^{k+1},
  //   c_{k+1} = -(k+1) c_k,  d_{k+1} = c_k - (k+1) d_k.
  long M = 0;
  if (a < 101.0) M = static_cast<long>(std::ceil(101.0 - a));
  const double w = static_cast<double>(M) + a;
  const double logw = std::log(w);

  double partial = 0.0;
  for (long k = M; k >= 0; --k) {
    const double t = static_cast<double>(k) + a;
    partial += std::log(t) / t;
  }

  double result = partial - 0.5 * logw * logw - 0.5 * logw / w;

  double ck = 1.0, dk = 0.0; // coefficients of F^(0)
  double wpow = 1.0 / w;     // (w)^{-(k+1)} for current k
  double fact = 1.0;         // k!
  int k = 0;
  for (int j = 1; j <= 7; ++j) {
    // advance derivative order from 2j-2 to 2j-1
    for (; k < 2 * j - 1; ++k) {
      const double cn = -(k + 1.0) * ck;
      const double dn = ck - (k + 1.0) * dk;
      ck = cn;
      dk = dn;
      wpow /= w;
      fact *= (k + 1.0);
    }
    result -= bernoulli_even(j) / (fact * (2.0 * j)) * (ck * logw + dk) * wpow;
  }
  return result;
}

double ramanujan_phi(double x) {
  if (!(x > -1.0)) throw std::domain_error("ramanujan_phi: requires x > -1");
  const double g1 = stieltjes_gamma1(1.0);
  if (x > 0.0) return std::log(x) / x - stieltjes_gamma1(x) + g1;
  if (x == 0.0) return 0.0;
  return g1 - stieltjes_gamma1(1.0 + x);
}

} // namespace sumcheck
