#include "sumcheck/bern2.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sumcheck/gamma.hpp"
#include "sumcheck/quadrature.hpp"

namespace sumcheck {

namespace {

constexpr int kTableN = 8192;

// c_0 = 1, c_n = sum_{j<n} (-1)^{n-j+1} c_j / (n-j+1). Accumulated in long
// double: the sums cancel only mildly, and the table is built once.
const std::vector<double>& cauchy_table() {
  static const std::vector<double> table = [] {
    std::vector<long double> c(kTableN + 1);
    c[0] = 1.0L;
    for (int n = 1; n <= kTableN; ++n) {
      long double acc = 0.0L;
      for (int j = 0; j < n; ++j) {
        const long double t = c[static_cast<size_t>(j)] / (n - j + 1.0L);
        acc += ((n - j + 1) % 2 == 0) ? t : -t;
      }
      c[static_cast<size_t>(n)] = acc;
    }
    std::vector<double> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) out[i] = static_cast<double>(c[i]);
    return out;
  }();
  return table;
}

} // namespace

int cauchy_table_size() { return kTableN; }

double cauchy_coeff(int n) {
  if (n < 0 || n > kTableN) throw std::out_of_range("cauchy_coeff");
  return cauchy_table()[static_cast<size_t>(n)];
}

double cauchy_abs_smooth(double x) {
  if (!(x >= 2.0)) throw std::domain_error("cauchy_abs_smooth: requires x >= 2");
  const double lg_x1 = log_gamma(x + 1.0);
  const auto f = [x, lg_x1](double t, double, double to1) {
    if (to1 <= 0.0) return 0.0;
    // to1 = 1 - t, exact even when t has rounded to 1
    return t * std::exp(log_gamma(x - t) - log_gamma(to1) - lg_x1);
  };
  return integrate_finite(EndpointAwareFn(f), 0.0, 1.0, 1e-15).value;
}

double binomial_log_moment(long n) {
  if (n < 1) throw std::domain_error("binomial_log_moment: requires n >= 1");
  if (n <= 30) {
    // exact alternating sum; C(30,15) ~ 1.6e8 keeps the cancellation noise
    // around 1e-7 absolute at the top end, small against the series weights
    // these moments meet
    double sum = 0.0, comp = 0.0, binom = static_cast<double>(n);
    for (long m = 1; m <= n; ++m) {
      if (m > 1)
        binom = binom * static_cast<double>(n - m + 1) / static_cast<double>(m);
      const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
      const double y = sgn * binom * std::log(static_cast<double>(m)) - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    return sum;
  }
  return binomial_log_moment_smooth(static_cast<double>(n));
}

double binomial_log_moment_smooth(double x) {
  if (!(x >= 2.0)) throw std::domain_error("binomial_log_moment_smooth: x >= 2");
  const auto f = [x](double t) {
    const double em = -std::expm1(-t); // 1 - e^{-t}
    return (em - std::pow(em, x)) / t;
  };
  return integrate_half_line(f, 0.0, 1.0, 1e-13).value;
}

} // namespace sumcheck
