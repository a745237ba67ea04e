// Integrals of psi and psi^2 on (0,1), the auxiliary function
// xi(x) = sum_{n>=1} H_n (1/(x+n) - 1/(n+1)), and the beta-derivative
// integrals that express int_0^1 (t^{u-1}-1)/(t-1) log^{n-1}(1-t) dt
// through complete Bell polynomials.

#include "catalog_util.hpp"

#include "sumcheck/combinatorics.hpp"
#include "sumcheck/constants.hpp"
#include "sumcheck/gamma.hpp"
#include "sumcheck/routes.hpp"
#include "sumcheck/zeta.hpp"

#include <algorithm>
#include <vector>

namespace sumcheck {

namespace {

// psi(1+y) - log y. The direct difference sheds digits once y is large, so
// switch to the asymptotic tail 1/(2y) - sum_k B_{2k}/(2k y^{2k}) at y >= 8.
double digamma_log_excess(double y) {
  if (y < 8.0) return digamma(1.0 + y) - std::log(y);
  const double y2 = y * y;
  double s = 1.0 / (2.0 * y);
  double yp = y2;
  for (int k = 1; k <= 10; ++k) {
    s -= bernoulli_even(k) / (2.0 * k * yp);
    yp *= y2;
  }
  return s;
}

// int_0^1 (t^{u-1}-1)/(t-1) log^logpow(1-t) dt with both endpoints resolved:
// near t=1 the ratio tends to u-1 and only the log factor is singular.
QuadOutcome beta_log_integral(double u, int logpow) {
  return integrate_finite(
      [u, logpow](double x, double, double to1) {
        const double lw = (x < 0.5) ? std::log1p(-x) : std::log(to1);
        const double lt = (to1 < 0.5) ? std::log1p(-to1) : std::log(x);
        double f = -std::expm1((u - 1.0) * lt) / to1;
        for (int i = 0; i < logpow; ++i) f *= lw;
        return f;
      },
      0.0, 1.0, 1e-13);
}

// xi(u) from its defining harmonic series; terms decay like log k / k^2.
SumOutcome xi_series(double u) {
  return sum_monotone_em(
      [u](long k) {
        const double kk = double(k);
        return harmonic_smooth(kk) * (1.0 - u) / ((u + kk) * (kk + 1.0));
      },
      [u](double x) {
        return harmonic_smooth(x) * (1.0 - u) / ((u + x) * (x + 1.0));
      },
      1, scaled_terms(10000));
}

// -(1/n) Y_n(x1,...,xn) with x1 = -gamma - psi(u) and
// x_k = psi^(k-1)(1) - psi^(k-1)(u) for k >= 2: the n-th derivative at v=0
// of -Gamma(u)Gamma(1+v)/(n Gamma(u+v)) that the integral equals.
double bell_beta_value(int n, double u) {
  std::vector<double> xs(static_cast<size_t>(n), 0.0);
  xs[0] = -euler - digamma(u);
  for (int k = 2; k <= n; ++k)
    xs[static_cast<size_t>(k - 1)] = polygamma(k - 1, 1.0) - polygamma(k - 1, u);
  const std::vector<double> y = bell_complete_all(n, xs);
  return -y[static_cast<size_t>(n)] / double(n);
}

} // namespace

void register_psi_square(std::vector<IdentityRecord>& v) {
  {
    auto& e = add_entry(v, "E3.5",
                        "2 int_0^1 xi(x) dx = zeta(2) - gamma^2 - 2 gamma1, "
                        "xi(x) = sum H_n (1/(x+n) - 1/(n+1))");
    e.lhs = [] {
      const QuadOutcome q = integrate_finite(
          [](double x, double, double) { return 2.0 * nielsen_xi(x); }, 0.0,
          1.0, 1e-13);
      return measured(q);
    };
    e.rhs = [] { return exact(zeta2 - euler * euler - 2.0 * stieltjes1); };
    e.tags = {"integral", "psi-square", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E3.6",
                        "int_0^1 [psi'(x) - psi^2(x) - 2 gamma psi(x)] dx = "
                        "2 zeta(2) - 2 gamma1");
    e.lhs = [] {
      // with psi(x) = psi(1+x) - 1/x the integrand becomes
      // psi'(1+x) - q^2 - 2 gamma q + 2 (q+gamma)/x, q = psi(1+x)
      const QuadOutcome q = integrate_finite(
          [](double x, double, double) {
            const double qq = digamma(1.0 + x);
            return polygamma(1, 1.0 + x) - qq * qq - 2.0 * euler * qq +
                   2.0 * digamma_ratio(x);
          },
          0.0, 1.0, 1e-13);
      return measured(q);
    };
    e.rhs = [] { return exact(2.0 * (zeta2 - stieltjes1)); };
    e.tags = {"integral", "psi-square", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E3.7",
                        "int_0^1 [psi^2(x) - 1/x^2 - 2 gamma/x] dx = "
                        "1 - 2 zeta(2) + 2 gamma1");
    e.lhs = [] {
      // same substitution: the counterterms absorb exactly the 1/x^2 and
      // 2 gamma/x poles, leaving psi^2(1+x) - 2 (psi(1+x)+gamma)/x
      const QuadOutcome q = integrate_finite(
          [](double x, double, double) {
            const double qq = digamma(1.0 + x);
            return qq * qq - 2.0 * digamma_ratio(x);
          },
          0.0, 1.0, 1e-13);
      return measured(q);
    };
    e.rhs = [] { return exact(1.0 - 2.0 * zeta2 + 2.0 * stieltjes1); };
    e.tags = {"integral", "psi-square", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E3.9",
                        "int_0^1 psi^2(1+x) dx = 2 sum log(n+1)/(n(n+1)) "
                        "+ 1 - 2 zeta(2) + 2 gamma1");
    e.lhs = [] {
      const RouteValue r = psi_square_quadrature();
      return Measured{r.value, r.err};
    };
    e.rhs = [] {
      const RouteValue r = psi_square_identity();
      return Measured{r.value, r.err};
    };
    e.tags = {"integral", "psi-square", "log-sum", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E3.9.1",
                        "int_0^1 [psi^2(1+x) - 2 (psi(1+x)+gamma)/x] dx = "
                        "1 - 2 zeta(2) + 2 gamma1");
    e.lhs = [] {
      const QuadOutcome q = integrate_finite(
          [](double x, double, double) {
            const double qq = digamma(1.0 + x);
            return qq * qq - 2.0 * digamma_ratio(x);
          },
          0.0, 1.0, 1e-13);
      return measured(q);
    };
    e.rhs = [] { return exact(1.0 - 2.0 * zeta2 + 2.0 * stieltjes1); };
    e.tags = {"integral", "psi-square", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E3.35.1",
                        "int_0^1 (psi(1+x)+gamma)/x dx + "
                        "int_1^inf (psi(1+x)-log x)/x dx = zeta(2) - gamma1");
    e.lhs = [] {
      const QuadOutcome head = integrate_finite(
          [](double x, double, double) { return digamma_ratio(x); }, 0.0, 1.0,
          1e-13);
      // tail after x -> 1/x; the bracket is the Stirling remainder of psi
      const QuadOutcome tail = integrate_finite(
          [](double x, double, double) {
            return digamma_log_excess(1.0 / x) / x;
          },
          0.0, 1.0, 1e-13);
      return Measured{head.value + tail.value,
                      head.err_estimate + tail.err_estimate};
    };
    e.rhs = [] { return exact(zeta2 - stieltjes1); };
    e.tags = {"integral", "log-sum", "stieltjes"};
  }

  struct XiCase {
    const char* id;
    double u;
    const char* label;
  };
  for (const XiCase c : {XiCase{"E10.6a", 0.5, "1/2"}, XiCase{"E10.6b", 2.0, "2"},
                         XiCase{"E10.6c", 3.0, "3"}}) {
    auto& e = add_entry(
        v, c.id,
        std::string("int_0^1 (t^(u-1)-1)/(t-1) log(1-t) dt = "
                    "sum H_n (1/(u+n) - 1/(n+1)) at u = ") +
            c.label);
    const double u = c.u;
    e.lhs = [u] { return measured(beta_log_integral(u, 1)); };
    e.rhs = [u] { return measured(xi_series(u)); };
    e.tags = {"integral", "series", "psi-square"};
  }

  struct BellCase {
    const char* id;
    int n;
    double u;
    const char* label;
  };
  for (const BellCase c :
       {BellCase{"E10.16a", 2, 0.5, "n = 2, u = 1/2"},
        BellCase{"E10.16b", 2, 1.0, "n = 2, u = 1"},
        BellCase{"E10.16c", 2, 2.0, "n = 2, u = 2"},
        BellCase{"E10.16d", 3, 0.5, "n = 3, u = 1/2"},
        BellCase{"E10.16e", 3, 1.0, "n = 3, u = 1"},
        BellCase{"E10.16f", 3, 2.0, "n = 3, u = 2"}}) {
    auto& e = add_entry(
        v, c.id,
        std::string("int_0^1 (t^(u-1)-1)/(t-1) log^(n-1)(1-t) dt = "
                    "-(1/n) Y_n(x_k), x_1 = -gamma-psi(u), "
                    "x_k = psi^(k-1)(1) - psi^(k-1)(u); ") +
            c.label);
    const int n = c.n;
    const double u = c.u;
    e.lhs = [n, u] { return measured(beta_log_integral(u, n - 1)); };
    e.rhs = [n, u] { return exact(bell_beta_value(n, u)); };
    e.tags = {"integral", "bell", "psi-square"};
  }

  {
    auto& e = add_entry(v, "E10.18",
                        "int_0^1 xi(u) du = "
                        "int_0^1 [1/(t log t) - 1/(t-1)] log(1-t) dt");
    e.lhs = [] {
      const QuadOutcome q = integrate_finite(
          [](double x, double, double) { return nielsen_xi(x); }, 0.0, 1.0,
          1e-13);
      return measured(q);
    };
    e.rhs = [] {
      const QuadOutcome q = integrate_finite(
          [](double x, double, double to1) {
            if (x < 0.5) {
              const double lt = std::log(x);
              // split so nothing overflows as x -> 0
              const double a = (std::log1p(-x) / x) / lt;
              const double b = std::log1p(-x) / (x - 1.0);
              return a - b;
            }
            // near t=1 the bracket is -(sum_{k>=2} w^k/(k(k-1)))/(w t log t)
            const double w = to1;
            const double lt = -std::log1p(-w);
            return -cancelled_pole_numerator(w) / (w * x * lt) * std::log(w);
          },
          0.0, 1.0, 1e-13);
      return measured(q);
    };
    e.tags = {"integral", "psi-square"};
  }

  {
    auto& e = add_entry(v, "EPsiSq",
                        "int_0^1 psi^2(1+x) dx: quadrature = Cauchy product "
                        "series with Euler-Maclaurin tail");
    e.lhs = [] {
      const RouteValue r = psi_square_quadrature();
      return Measured{r.value, r.err};
    };
    e.rhs = [] {
      const RouteValue r = psi_square_series(scaled_terms(4000), true);
      return Measured{r.value, r.err};
    };
    e.tags = {"integral", "series", "psi-square"};
  }

  {
    auto& e = add_entry(v, "EMaclaurinPsiSq",
                        "int_0^1 (psi(1+x)+gamma)^2 dx = sum_{n>=4} "
                        "((-1)^n/(n-1)) sum_{k=2}^{n-2} zeta(k) zeta(n-k), "
                        "Abel sense");
    e.lhs = [] {
      const QuadOutcome q = integrate_finite(
          [](double x, double, double) {
            const double p = digamma(1.0 + x) + euler;
            return p * p;
          },
          0.0, 1.0, 1e-13);
      return measured(q);
    };
    e.rhs = [] {
      // the terms tend to +-1, so only Chebyshev acceleration (which sums
      // the Abel value) makes sense here; plain pairing misses it by 1/2
      const int terms = int(std::max<long>(scaled_terms(36), 12));
      std::vector<double> z(static_cast<size_t>(terms) + 8, 0.0);
      for (size_t k = 2; k < z.size(); ++k) z[k] = riemann_zeta(double(k));
      const auto mag = [&z](long m) {
        double s = 0.0;
        for (long k = 2; k <= m - 2; ++k)
          s += z[static_cast<size_t>(k)] * z[static_cast<size_t>(m - k)];
        return s / double(m - 1);
      };
      return measured(sum_alternating(mag, 4, terms));
    };
    e.tags = {"series", "integral", "psi-square", "zeta-series"};
  }
}

} // namespace sumcheck
