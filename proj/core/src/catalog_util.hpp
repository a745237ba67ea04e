#pragma once

// Small shared plumbing for the catalog group files.

#include "sumcheck/catalog.hpp"
#include "sumcheck/constants.hpp"
#include "sumcheck/gamma.hpp"
#include "sumcheck/quadrature.hpp"
#include "sumcheck/series.hpp"
#include "sumcheck/zeta.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace sumcheck {

inline Measured measured(const QuadOutcome& q) {
  return {q.value, q.err_estimate};
}

inline Measured measured(const SumOutcome& s) {
  return {s.value, s.err_estimate};
}

// For sides assembled from stored constants: charge a couple of ulps so the
// comparison never pretends a closed form is exact arithmetic.
inline Measured exact(double v) { return {v, 4e-16 * std::fabs(v)}; }

// (psi(1+x)+gamma)/x without the 0/0 at the origin: the alternating zeta
// series below 1/8, plain digamma above.
inline double digamma_ratio(double x) {
  if (std::fabs(x) < 0.125) {
    static const std::vector<double> zetas = [] {
      std::vector<double> z;
      for (int n = 2; n <= 24; ++n) z.push_back(riemann_zeta(double(n)));
      return z;
    }();
    double s = 0.0, p = 1.0;
    for (size_t i = 0; i < zetas.size(); ++i) {
      const double t = zetas[i] * p;
      s += (i % 2 == 0) ? t : -t;
      if (std::fabs(t) < 1e-18 * std::fabs(s)) break;
      p *= x;
    }
    return s;
  }
  return (digamma(1.0 + x) + euler) / x;
}

inline IdentityRecord& add_entry(std::vector<IdentityRecord>& v, std::string id,
                                 std::string anchor) {
  v.emplace_back();
  v.back().id = std::move(id);
  v.back().anchor = std::move(anchor);
  return v.back();
}

// sum_{k>=2} u^k/(k(k-1)) = u + (1-u)log(1-u). Several integrands need this
// combination near u = 0 or t = 1, where the direct form cancels to O(u^2);
// the series keeps it to full precision.
inline double cancelled_pole_numerator(double u) {
  double num = 0.0;
  double p = u;
  for (int k = 2; k < 64; ++k) {
    p *= u;
    const double t = p / (double(k) * double(k - 1));
    num += t;
    if (t < 1e-18 * num) break;
  }
  return num;
}

// log(1-w) + w = -sum_{k>=2} w^k/k, again as a series to dodge the
// subtraction when w is small.
inline double log1p_minus_linear(double w) {
  double m = 0.0;
  double p = w;
  for (int k = 2; k < 64; ++k) {
    p *= w;
    const double t = p / double(k);
    m -= t;
    if (t < 1e-18 * std::fabs(m)) break;
  }
  return m;
}

} // namespace sumcheck
