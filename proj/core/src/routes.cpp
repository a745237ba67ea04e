#include "sumcheck/routes.hpp"

#include <cmath>

#include "sumcheck/bern2.hpp"
#include "sumcheck/constants.hpp"
#include "sumcheck/euler_const.hpp"
#include "sumcheck/gamma.hpp"
#include "sumcheck/quadrature.hpp"
#include "sumcheck/series.hpp"
#include "sumcheck/zeta.hpp"

namespace sumcheck {

namespace {

double log_sum_density(double x) { return std::log(x + 1.0) / (x * (x + 1.0)); }

// log x/x - (log^2 x - log^2(x-1))/2: how far the partial sums of log k/k
// run ahead of their integral over one step. Rewritten as
// log(x) * (1/x + log1p(-1/x)) + log1p(-1/x)^2 / 2 so huge x (the EM tail
// substitutes x = N/u) keeps full relative accuracy; the naive difference
// cancels to nothing and its noise gets amplified by the substitution.
double log_partial_step(double x) {
  if (x > 10.0) {
    const double r = 1.0 / x;
    double p = r * r;
    double w = -0.5 * p; // 1/x + log1p(-1/x) = -sum_{j>=2} r^j / j
    for (int j = 3; j <= 44; ++j) {
      p *= r;
      const double t = p / j;
      w -= t;
      if (t < 1e-20 * std::fabs(w)) break;
    }
    const double m = std::log1p(-r);
    return std::log(x) * w + 0.5 * m * m;
  }
  const double a = std::log(x);
  const double b = std::log(x - 1.0);
  return a / x - 0.5 * (a * a - b * b);
}

// log(t+1)/(t+1) - log t/t without the catastrophic cancellation the plain
// difference has for large t.
double log_over_x_step(double t) {
  return std::log1p(1.0 / t) / (t + 1.0) - std::log(t) / (t * (t + 1.0));
}

double harmonic_weighted_step(double x) {
  return -harmonic_smooth(x) * log_over_x_step(x + 1.0);
}

} // namespace

RouteValue log_sum_reference() {
  auto term = [](long n) { return log_sum_density(static_cast<double>(n)); };
  const SumOutcome s = sum_monotone_em(term, log_sum_density, 1, scaled_terms(10000));
  return {s.value, s.err_estimate};
}

RouteValue log_sum_quadrature() {
  auto f = [](double x, double, double to1) {
    const double lg1mx = x < 0.5 ? std::log1p(-x) : std::log(to1);
    const double lgx = x < 0.5 ? std::log(x) : std::log1p(-to1);
    return to1 * lg1mx / (x * lgx);
  };
  const QuadOutcome q = integrate_finite(EndpointAwareFn(f), 0.0, 1.0, 1e-13);
  return {q.value, q.err_estimate};
}

RouteValue log_sum_alternating() {
  auto a = [](long n) {
    return riemann_zeta(static_cast<double>(n) + 1.0) / static_cast<double>(n);
  };
  const SumOutcome s =
      sum_alternating(a, 1, static_cast<int>(scaled_terms(64)));
  return {s.value, s.err_estimate};
}

RouteValue log_sum_zeta_prime() {
  double sum = 0.0;
  double last = 1.0;
  const long cap = scaled_terms(64);
  for (long n = 2; n <= cap; ++n) {
    last = riemann_zeta_prime(static_cast<double>(n));
    sum -= last;
    if (n > 8 && std::fabs(last) < 1e-18 * std::fabs(sum)) break;
  }
  return {sum, std::fabs(last) + 2e-16 * std::fabs(sum)};
}

RouteValue log_sum_em() {
  auto term = [](long n) {
    const double x = static_cast<double>(n);
    return std::log1p(1.0 / x) / x;
  };
  auto density = [](double x) { return std::log1p(1.0 / x) / x; };
  const SumOutcome s = sum_monotone_em(term, density, 1, scaled_terms(10000));
  return {s.value, s.err_estimate};
}

RouteValue log_sum_gamma_integral() {
  auto f = [](double x) {
    const double lg =
        x < 0.5 ? std::log(-std::expm1(-x)) : std::log1p(-std::exp(-x));
    return std::exp(-x) * std::log(x) * lg;
  };
  const QuadOutcome q = integrate_half_line(f, 0.0, 2.0, 1e-13);
  return {q.value - euler, q.err_estimate + 2e-16};
}

RouteValue log_sum_harmonic() {
  auto term = [](long n) { return harmonic_weighted_step(static_cast<double>(n)); };
  const SumOutcome s =
      sum_monotone_em(term, harmonic_weighted_step, 1, scaled_terms(8000));
  return {s.value, s.err_estimate};
}

RouteValue stieltjes1_em() { return {stieltjes_gamma1(1.0), 1e-13}; }

RouteValue stieltjes1_richardson() {
  auto F = [](long N) {
    double acc = 0.0;
    double c = 0.0;
    for (long k = 2; k <= N; ++k) {
      const double t = std::log(static_cast<double>(k)) / k - c;
      const double next = acc + t;
      c = (next - acc) - t;
      acc = next;
    }
    const double L = std::log(static_cast<double>(N));
    return acc - 0.5 * L * L;
  };
  // The residual expands in L/N, L/N^2, 1/N^2, L/N^4, 1/N^4 (no 1/N or
  // 1/N^3 terms appear), so five basis functions pin it to ~1e-12.
  auto basis = [](int i, double N) {
    const double L = std::log(N);
    switch (i) {
      case 1: return L / N;
      case 2: return L / (N * N);
      case 3: return 1.0 / (N * N);
      case 4: return L / (N * N * N * N);
      default: return 1.0 / (N * N * N * N);
    }
  };
  const long n_max = scaled_terms(1L << 17);
  const double cancel = 0.5 * std::log(static_cast<double>(n_max)) *
                        std::log(static_cast<double>(n_max));
  const SumOutcome s = limit_richardson(F, n_max, 6, basis, 2e-16 * cancel);
  return {s.value, s.err_estimate};
}

RouteValue stieltjes1_series_limit() {
  auto term = [](long n) { return log_partial_step(static_cast<double>(n)); };
  const SumOutcome s =
      sum_monotone_em(term, log_partial_step, 2, scaled_terms(4000));
  return {s.value, s.err_estimate};
}

RouteValue stieltjes1_quadrature() {
  auto f = [](double x) {
    const double lg =
        x < 0.5 ? std::log(-std::expm1(-x)) : std::log1p(-std::exp(-x));
    return lg * binet_kernel(x);
  };
  const QuadOutcome q = integrate_half_line(f, 0.0, 1.0, 1e-13);
  return {0.5 * (zeta2 - euler * euler) - q.value, q.err_estimate + 2e-16};
}

RouteValue psi_square_quadrature() {
  auto f = [](double x) {
    const double p = digamma(1.0 + x);
    return p * p;
  };
  const QuadOutcome q = integrate_finite(f, 0.0, 1.0, 1e-13);
  return {q.value, q.err_estimate};
}

RouteValue psi_square_identity() {
  const RouteValue s = log_sum_alternating();
  const double g1 = stieltjes_gamma1(1.0);
  return {2.0 * s.value + 1.0 - 2.0 * zeta2 + 2.0 * g1, 2.0 * s.err + 4e-13};
}

RouteValue psi_square_series(long n_terms, bool em_tail) {
  auto term = [](long n) {
    const double x = static_cast<double>(n);
    return std::fabs(cauchy_coeff(n)) / (x * x);
  };
  auto density = [](double x) { return cauchy_abs_smooth(x) / (x * x); };
  const double base = 1.0 - euler * euler - zeta2;
  if (em_tail) {
    const SumOutcome s = sum_monotone_em(term, density, 1, n_terms, 2);
    return {base + 2.0 * s.value, 2.0 * s.err_estimate + 4e-16};
  }
  double partial = 0.0;
  for (long n = n_terms; n >= 1; --n) partial += term(n);
  // Bare truncation: report the dropped tail as the error instead of
  // folding it in.
  const SumOutcome tail = sum_monotone_em(term, density, n_terms + 1, 8);
  return {base + 2.0 * partial, 2.0 * (tail.value + tail.err_estimate) + 4e-16};
}

} // namespace sumcheck
