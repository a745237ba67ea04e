// Every route to S = sum log(n+1)/(n(n+1)) that the catalog cross-checks:
// quadratures, accelerated alternating series, Euler-Maclaurin sums, and the
// two Bell-polynomial double sums that reshuffle it.

#include "catalog_util.hpp"

#include "sumcheck/combinatorics.hpp"
#include "sumcheck/constants.hpp"
#include "sumcheck/expint.hpp"
#include "sumcheck/gamma.hpp"
#include "sumcheck/polylog.hpp"
#include "sumcheck/routes.hpp"
#include "sumcheck/zeta.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace sumcheck {

namespace {

Measured s_reference() {
  const RouteValue r = log_sum_reference();
  return {r.value, r.err};
}

// pi coth(pi x) - 1/x, stable at the origin (the poles cancel to pi^2 x/3).
double coth_bracket(double x) {
  if (x <= 0.3) {
    // x [pi coth(pi x) - 1/x] = sum_{n>=1} B_2n (2 pi x)^{2n} / (2n)!
    const double q = 2.0 * pi * x;
    const double q2 = q * q;
    double s = 0.0, p = 1.0, f = 1.0;
    for (int n = 1; n <= 17; ++n) {
      p *= q2;
      f *= double(2 * n - 1) * double(2 * n);
      const double t = bernoulli_even(n) * p / f;
      s += t;
      if (std::fabs(t) < 1e-18 * std::fabs(s)) break;
    }
    return s / x;
  }
  return pi - 1.0 / x + 2.0 * pi / std::expm1(2.0 * pi * x);
}

// H_k^{(i)} for i = 1..imax, k0 extra shift for the H_{k-1} variant.
std::vector<double> harmonic_powers(long k, int imax) {
  std::vector<double> h(size_t(imax), 0.0);
  for (long j = 1; j <= k; ++j) {
    const double r = 1.0 / double(j);
    double p = r;
    for (int i = 0; i < imax; ++i) {
      h[size_t(i)] += p;
      p *= r;
    }
  }
  return h;
}

// Inner sum of the first Bell double sum: sum_m Y_{m-1}/(m m!) over the
// arguments x_i = (-1)^i (i-1)! H_k^{(i)}. The terms alternate and decay
// only like k/m^2, so the magnitudes go through the alternating accelerator.
double bell_inner_accelerated(long k, int mterms) {
  const int need = std::max(mterms - 1, 1);
  const auto h = harmonic_powers(k, need);
  std::vector<double> xs(static_cast<size_t>(need));
  double f = 1.0; // (i-1)!
  for (int i = 1; i <= need; ++i) {
    if (i > 1) f *= double(i - 1);
    xs[size_t(i - 1)] = ((i % 2 == 0) ? f : -f) * h[size_t(i - 1)];
  }
  const auto y = bell_complete_all(mterms - 1, xs);
  std::vector<double> mag(static_cast<size_t>(mterms));
  double mf = 1.0; // m!
  for (int m = 1; m <= mterms; ++m) {
    mf *= double(m);
    mag[size_t(m - 1)] = std::fabs(y[size_t(m - 1)]) / (double(m) * mf);
  }
  const SumOutcome s = sum_alternating(
      [&mag](long m) { return mag[size_t(m - 1)]; }, 1, mterms);
  return s.value;
}

// Smooth continuation of that inner sum:
//   -int_0^1 Gamma(x+1) Gamma(1+s) / Gamma(x+1+s) * log s ds.
double bell_inner_integral(double x) {
  const double lgx = log_gamma(x + 1.0);
  const QuadOutcome q = integrate_finite(
      [lgx, x](double s, double, double) {
        // for huge x the lgamma difference loses everything to ulps; a
        // midpoint digamma gives it analytically
        const double dlg = (x > 1e6)
                               ? s * digamma(x + 1.0 + 0.5 * s)
                               : log_gamma(x + 1.0 + s) - lgx;
        return -std::exp(log_gamma(1.0 + s) - dlg) * std::log(s);
      },
      0.0, 1.0, 1e-12);
  return q.value;
}

// Inner sum of the second Bell double sum. Finite (j <= k) and exactly equal
// to int_0^1 Gamma(k-s)/(Gamma(1-s) Gamma(k)) ds; capped at 44 terms since
// the coefficients die off like Poisson(log k) far below that.
double bell_inner_finite(long k) {
  const int jmax = int(std::min<long>(k, 44));
  const int need = std::max(jmax - 1, 0);
  const auto h = harmonic_powers(k - 1, std::max(need, 1));
  std::vector<double> xs(size_t(std::max(need, 1)), 0.0);
  double f = 1.0;
  for (int i = 1; i <= need; ++i) {
    if (i > 1) f *= double(i - 1);
    xs[size_t(i - 1)] = ((i % 2 == 0) ? -f : f) * h[size_t(i - 1)];
  }
  const auto y = bell_complete_all(std::max(jmax - 1, 0), xs);
  double s = 0.0, jf = 1.0;
  for (int j = 1; j <= jmax; ++j) {
    jf *= double(j);
    const double t = y[size_t(j - 1)] / jf;
    s += (j % 2 == 1) ? t : -t;
  }
  return s;
}

double bell_finite_integral(double x) {
  const double lgx = log_gamma(x);
  const QuadOutcome q = integrate_finite(
      [lgx, x](double s, double, double om_s) {
        // x - s written as (x-1) + (1-s) so the s -> 1 endpoint stays
        // resolved instead of rounding onto a gamma pole
        const double xms = (x - 1.0) + om_s;
        const double dlg = (x > 1e6)
                               ? -s * digamma(x - 0.5 * s)
                               : log_gamma(xms) - lgx;
        return std::exp(dlg - log_gamma(om_s));
      },
      0.0, 1.0, 1e-12);
  return q.value;
}

} // namespace

void register_log_sum(std::vector<IdentityRecord>& v) {
  {
    auto& e = add_entry(v, "E3.8",
                        "int_0^1 (psi(1+x)+gamma)/x dx = "
                        "sum_{n>=1} log(n+1)/(n(n+1))");
    e.lhs = [] {
      return measured(integrate_finite(
          [](double x, double, double) { return digamma_ratio(x); }, 0.0, 1.0,
          1e-13));
    };
    e.rhs = [] { return s_reference(); };
    e.tags = {"integral", "series", "log-sum"};
  }

  {
    auto& e = add_entry(v, "E3.10.1",
                        "sum log(n+1)/(n(n+1)) = "
                        "int_0^1 (1-x)log(1-x)/(x log x) dx");
    e.lhs = [] {
      const RouteValue r = log_sum_quadrature();
      return Measured{r.value, r.err};
    };
    e.rhs = [] { return s_reference(); };
    e.tags = {"integral", "series", "log-sum"};
  }

  {
    auto& e = add_entry(v, "E3.10.2",
                        "sum log(n+1)/(n(n+1)) = "
                        "sum_{n>=1} (-1)^{n+1} zeta(n+1)/n");
    e.lhs = [] {
      const RouteValue r = log_sum_alternating();
      return Measured{r.value, r.err};
    };
    e.rhs = [] { return s_reference(); };
    e.tags = {"series", "log-sum"};
  }

  {
    auto& e = add_entry(v, "E3.10.3",
                        "sum log(n+1)/(n(n+1)) = -sum_{n>=2} zeta'(n)");
    e.lhs = [] {
      const RouteValue r = log_sum_zeta_prime();
      return Measured{r.value, r.err};
    };
    e.rhs = [] { return s_reference(); };
    e.tags = {"series", "log-sum"};
  }

  {
    auto& e = add_entry(v, "E3.10.4",
                        "sum log(n+1)/(n(n+1)) = sum_{n>=1} log(1+1/n)/n");
    e.lhs = [] {
      const RouteValue r = log_sum_em();
      return Measured{r.value, r.err};
    };
    e.rhs = [] { return s_reference(); };
    e.tags = {"series", "log-sum"};
  }

  {
    auto& e = add_entry(v, "E3.10.5",
                        "sum log(n+1)/(n(n+1)) = "
                        "int_0^inf (e^{-x}-1) log(1-e^{-x})/x dx");
    e.lhs = [] {
      return measured(integrate_half_line(
          [](double x) {
            const double lg = x < 0.5 ? std::log(-std::expm1(-x))
                                      : std::log1p(-std::exp(-x));
            return std::expm1(-x) * lg / x;
          },
          0.0, 1.0, 1e-13));
    };
    e.rhs = [] { return s_reference(); };
    e.tags = {"integral", "series", "log-sum"};
  }

  {
    auto& e = add_entry(v, "E3.10.6",
                        "sum log(n+1)/(n(n+1)) = "
                        "-gamma + int_0^inf e^{-x} log x log(1-e^{-x}) dx");
    e.lhs = [] {
      const RouteValue r = log_sum_gamma_integral();
      return Measured{r.value, r.err};
    };
    e.rhs = [] { return s_reference(); };
    e.tags = {"integral", "series", "log-sum"};
  }

  {
    auto& e = add_entry(v, "E3.10.7",
                        "sum log(n+1)/(n(n+1)) = 1 - gamma + pi^2/12 + "
                        "2 int_0^inf t/(e^{2pi t}-1) "
                        "sum_n 1/(n(n+1)((n+1)^2+t^2)) dt");
    e.lhs = [] { return s_reference(); };
    e.rhs = [] {
      const QuadOutcome q = integrate_half_line(
          [](double t) {
            const double t2 = t * t;
            double w = 0.0;
            for (long n = 1200; n >= 1; --n) {
              const double m = double(n + 1);
              w += 1.0 / (double(n) * m * (m * m + t2));
            }
            return 2.0 * t * w / std::expm1(2.0 * pi * t);
          },
          0.0, 2.0 * pi, 1e-13);
      // truncating the weight sum at 1200 leaves < 2e-10 of it, which maps
      // to < 2e-11 of the integral
      return Measured{1.0 - euler + zeta2 / 2.0 + q.value,
                      q.err_estimate + 2e-11};
    };
    e.notes = [](double, double) {
      return std::string("per-n weighted variant of the Binet route; the "
                         "unweighted printed form is X3.10.7");
    };
    e.tags = {"integral", "series", "log-sum"};
  }

  {
    auto& e = add_entry(v, "X3.10.7",
                        "sum log(n+1)/(n(n+1)) =? 3/2 - 2 gamma + pi^2/12 + "
                        "int_0^inf (pi coth(pi x) - 1/x)/(e^{2pi x}-1) dx");
    e.status = EntryStatus::suspect;
    e.lhs = [] { return s_reference(); };
    e.rhs = [] {
      const QuadOutcome q = integrate_half_line(
          [](double x) { return coth_bracket(x) / std::expm1(2.0 * pi * x); },
          0.0, 2.0 * pi, 1e-13);
      return Measured{1.5 - 2.0 * euler + zeta2 / 2.0 + q.value,
                      q.err_estimate};
    };
    e.notes = [](double lhs, double rhs) {
      char buf[200];
      std::snprintf(buf, sizeof buf,
                    "lhs - rhs = %.9e; the integral alone is log(2pi)/2 - 1/2 "
                    "- gamma/2, so this rhs = 1 - (5/2)gamma + pi^2/12 + "
                    "log(2pi)/2; see E3.10.7 for the weighted form that holds",
                    lhs - rhs);
      return std::string(buf);
    };
    e.tags = {"integral", "log-sum", "suspect"};
  }

  {
    auto& e = add_entry(v, "E3.12",
                        "int_0^1 log(-log u) log(1-u) du = "
                        "gamma + sum log(n+1)/(n(n+1))");
    e.lhs = [] {
      return measured(integrate_finite(
          [](double u, double, double to1) {
            const double nl = u < 0.5 ? -std::log(u) : -std::log1p(-to1);
            const double lg1mu = u < 0.5 ? std::log1p(-u) : std::log(to1);
            return std::log(nl) * lg1mu;
          },
          0.0, 1.0, 1e-13));
    };
    e.rhs = [] {
      const Measured s = s_reference();
      return Measured{euler + s.value, s.err};
    };
    e.tags = {"integral", "series", "log-sum"};
  }

  for (double u : {0.5, 1.0}) {
    auto& e = add_entry(v, u == 0.5 ? "E3.14a" : "E3.14b",
                        std::string("int_0^u (psi(1+x)+gamma)/x dx = "
                                    "sum_{n>=1} log((n+u)/n)/n at u = ") +
                            (u == 0.5 ? "1/2" : "1"));
    e.lhs = [u] {
      return measured(integrate_finite(
          [](double x, double, double) { return digamma_ratio(x); }, 0.0, u,
          1e-13));
    };
    e.rhs = [u] {
      return measured(sum_monotone_em(
          [u](long n) { return std::log1p(u / double(n)) / double(n); },
          [u](double x) { return std::log1p(u / x) / x; }, 1,
          scaled_terms(10000)));
    };
    e.tags = {"integral", "series", "log-sum"};
  }

  for (double u : {0.25, 0.5}) {
    auto& e = add_entry(v, u == 0.25 ? "E3.17.5a" : "E3.17.5b",
                        std::string("int_0^1 (u^x-1)/x dx = "
                                    "Ei(log u) - gamma - log(-log u) at u = ") +
                            (u == 0.25 ? "1/4" : "1/2"));
    e.lhs = [u] {
      const double L = std::log(u);
      return measured(integrate_finite(
          [L](double x, double, double) { return std::expm1(x * L) / x; }, 0.0,
          1.0, 1e-13));
    };
    e.rhs = [u] {
      const double L = std::log(u);
      return exact(expint_ei(L) - euler - std::log(-L));
    };
    e.tags = {"integral", "log-sum"};
  }

  for (double u : {0.25, 0.5}) {
    auto& e = add_entry(v, u == 0.25 ? "E3.17.6a" : "E3.17.6b",
                        std::string("int_0^1 (u^x-1)/x dx = "
                                    "sum_{n>=1} log^n(u)/(n n!) at u = ") +
                            (u == 0.25 ? "1/4" : "1/2"));
    e.lhs = [u] {
      const double L = std::log(u);
      return measured(integrate_finite(
          [L](double x, double, double) { return std::expm1(x * L) / x; }, 0.0,
          1.0, 1e-13));
    };
    e.rhs = [u] {
      const double L = std::log(u);
      double s = 0.0, asum = 0.0, p = 1.0;
      for (int n = 1; n <= 300; ++n) {
        p *= L / double(n);
        const double t = p / double(n);
        s += t;
        asum += std::fabs(t);
        if (std::fabs(t) < 1e-18 * std::fabs(s)) break;
      }
      return Measured{s, 4e-16 * asum};
    };
    e.tags = {"integral", "log-sum"};
  }

  {
    auto& e = add_entry(v, "E3.23",
                        "sum log(n+1)/(n(n+1)) = "
                        "-sum H_n [log(n+2)/(n+2) - log(n+1)/(n+1)]");
    e.lhs = [] {
      const RouteValue r = log_sum_harmonic();
      return Measured{r.value, r.err};
    };
    e.rhs = [] { return s_reference(); };
    e.tags = {"series", "log-sum"};
  }

  {
    auto& e = add_entry(v, "E3.67",
                        "sum log(n+1)/(n(n+1)) = zeta(2) - "
                        "int_0^1 (t log t - t + 1)/(t log^2 t) Li2(t) dt");
    e.lhs = [] {
      const QuadOutcome q = integrate_finite(
          [](double t, double, double to1) {
            double num, lg;
            if (t < 0.7) {
              lg = std::log(t);
              num = t * lg - t + 1.0;
            } else {
              // t log t - t + 1 = sum_{k>=2} (1-t)^k/(k(k-1)): the direct
              // form loses ~w^2 of cancellation near t = 1
              lg = std::log1p(-to1);
              num = cancelled_pole_numerator(to1);
            }
            return num / (t * lg * lg) * polylog(2, t);
          },
          0.0, 1.0, 1e-13);
      return Measured{zeta2 - q.value, q.err_estimate + 4e-16 * zeta2};
    };
    e.rhs = [] { return s_reference(); };
    e.tags = {"integral", "series", "log-sum"};
  }

  {
    auto& e = add_entry(v, "E3.28",
                        "sum log(n+1)/(n(n+1)) = sum_k (1/k^2) sum_m "
                        "Y_{m-1}((-1)^i (i-1)! H_k^{(i)})/(m m!)");
    e.lhs = [] {
      const int mterms = int(std::max<long>(scaled_terms(12), 8));
      return measured(sum_monotone_em(
          [mterms](long k) {
            return bell_inner_accelerated(k, mterms) / (double(k) * double(k));
          },
          [](double x) { return bell_inner_integral(x) / (x * x); }, 1,
          scaled_terms(200)));
    };
    e.rhs = [] { return s_reference(); };
    e.tol_abs = 1e-5;
    e.notes = [](double, double) {
      return std::string("inner sum accelerated over 12 alternating "
                         "magnitudes; tail from the gamma-ratio integral "
                         "form of the inner sum");
    };
    e.tags = {"series", "log-sum", "bell"};
  }

  {
    auto& e = add_entry(v, "E6.15",
                        "sum_k (-1)^{k+1} zeta(k+1)/k = sum_k (1/k^2) "
                        "sum_{j<=k} (-1)^{j-1} "
                        "Y_{j-1}((-1)^{i-1} (i-1)! H_{k-1}^{(i)})/j!");
    e.lhs = [] {
      return measured(sum_monotone_em(
          [](long k) { return bell_inner_finite(k) / (double(k) * double(k)); },
          [](double x) { return bell_finite_integral(x) / (x * x); }, 1,
          scaled_terms(200)));
    };
    e.rhs = [] {
      const RouteValue r = log_sum_alternating();
      return Measured{r.value, r.err};
    };
    e.tol_abs = 1e-5;
    e.tags = {"series", "log-sum", "bell"};
  }
}

} // namespace sumcheck
