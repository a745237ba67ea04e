#include "sumcheck/barnes.hpp"

#include <cmath>
#include <stdexcept>

#include "sumcheck/combinatorics.hpp"
#include "sumcheck/constants.hpp"
#include "sumcheck/gamma.hpp"
#include "sumcheck/zeta.hpp"

namespace sumcheck {

namespace {

// log G(1+x) for |x| <= 1/2 from the Weierstrass product
//   G(1+x) = (2 pi)^{x/2} exp(-(x + x^2(1+gamma))/2)
//            prod_k (1+x/k)^k exp(x^2/(2k) - x),
// with the k > K part of the product resummed through zeta tails:
//   sum_{k>K} [k log(1+x/k) - x + x^2/(2k)]
//     = sum_{j>=3} (-1)^{j+1} x^j / j * (zeta(j-1) - H_K^{(j-1)}).
double log_barnes_g1p_core(double x) {
  const int K = 32;
  double s = 0.5 * x * log_2pi - 0.5 * (x + x * x * (1.0 + euler));
  for (int k = 1; k <= K; ++k) {
    const double kk = static_cast<double>(k);
    s += kk * std::log1p(x / kk) - x + x * x / (2.0 * kk);
  }
  double xj = x * x; // x^j rolling, starts at j=2
  for (int j = 3; j <= 80; ++j) {
    xj *= x;
    const double tail = riemann_zeta(j - 1.0) - harmonic(K, j - 1);
    const double term = ((j % 2 == 1) ? 1.0 : -1.0) * xj / j * tail;
    s += term;
    if (std::fabs(term) < 1e-18 * (std::fabs(s) + 1e-30)) break;
  }
  return s;
}

} // namespace

double log_barnes_g(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_barnes_g: requires x > 0");
  // walk down with G(x+1) = Gamma(x) G(x) until 1+t lands in [1/2, 3/2]
  double acc = 0.0;
  while (x > 1.5) {
    x -= 1.0;
    acc += log_gamma(x);
  }
  return acc + log_barnes_g1p_core(x - 1.0);
}

} // namespace sumcheck
