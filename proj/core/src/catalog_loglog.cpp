// Integrals built on log(-log x), their exponential-integral closed forms,
// and the factorial series sum H_k/k! and sum log(k)/k! that tie them to the
// Gompertz constant -e Ei(-1).

#include "sumcheck/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "catalog_util.hpp"
#include "sumcheck/combinatorics.hpp"
#include "sumcheck/constants.hpp"
#include "sumcheck/expint.hpp"
#include "sumcheck/gamma.hpp"
#include "sumcheck/quadrature.hpp"
#include "sumcheck/series.hpp"
#include "sumcheck/zeta.hpp"

namespace sumcheck {

namespace {

// -log x on (0,1) without cancellation at either end: direct log below 1/2,
// log1p of the distance to 1 above it (to1 comes from the quadrature rule, so
// it stays accurate even when x is within an ulp of 1).
double minus_log(double x, double to1) {
  return (x < 0.5) ? -std::log(x) : -std::log1p(-to1);
}

// Richardson basis for limits whose residuals expand in plain powers of 1/N.
double inv_power_basis(int i, double n) { return std::pow(n, -double(i)); }

// Partial sums of the factorial series; both converge far below double
// precision by k = 60 (the tail is under H_60/60!).
double harmonic_over_factorial() {
  double s = 0.0;
  for (int k = 1; k <= 60; ++k) s += harmonic(k) / factorial(k);
  return s;
}

double log_over_factorial() {
  double s = 0.0;
  for (int k = 2; k <= 60; ++k) s += std::log(double(k)) / factorial(k);
  return s;
}

} // namespace

void register_loglog(std::vector<IdentityRecord>& v) {
  struct PowerCase {
    const char* id;
    double a;
    const char* label;
  };
  for (const PowerCase c : {PowerCase{"E3.11a", 0.0, "a = 0"},
                            PowerCase{"E3.11b", 1.0, "a = 1"},
                            PowerCase{"E3.11c", 2.5, "a = 5/2"}}) {
    auto& e = add_entry(
        v, c.id,
        std::string("int_0^1 u^a log(-log u) du = -(gamma + log(1+a))/(1+a); ") +
            c.label);
    const double a = c.a;
    e.lhs = [a] {
      return measured(integrate_finite(
          [a](double x, double, double to1) {
            const double w = (a == 0.0) ? 1.0 : std::pow(x, a);
            return w * std::log(minus_log(x, to1));
          },
          0.0, 1.0, 1e-13));
    };
    e.rhs = [a] { return exact(-(euler + std::log1p(a)) / (1.0 + a)); };
    e.tags = {"integral", "log-log"};
  }

  struct LogPowCase {
    const char* id;
    int n;
  };
  for (const LogPowCase c : {LogPowCase{"E3.18a", 1}, LogPowCase{"E3.18b", 2},
                             LogPowCase{"E3.18c", 3}, LogPowCase{"E3.18d", 4},
                             LogPowCase{"E3.18e", 5}, LogPowCase{"E3.18f", 6}}) {
    auto& e = add_entry(
        v, c.id,
        std::string("int_0^1 log^n(u)/(1-u) du = (-1)^n n! zeta(n+1); n = ") +
            std::to_string(c.n));
    const int n = c.n;
    e.lhs = [n] {
      return measured(integrate_finite(
          [n](double x, double, double to1) {
            const double lt = (x < 0.5) ? std::log(x) : std::log1p(-to1);
            double p = lt;
            for (int i = 1; i < n; ++i) p *= lt;
            return p / to1;
          },
          0.0, 1.0, 1e-13));
    };
    e.rhs = [n] {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      return exact(sign * factorial(n) * riemann_zeta(double(n + 1)));
    };
    e.tags = {"integral", "log-log"};
  }

  {
    auto& e = add_entry(v, "E3.19.5a",
                        "int_0^u log(-log x) dx = u log(-log u) - li(u); "
                        "u = 1/2");
    e.lhs = [] {
      return measured(integrate_finite(
          [](double x, double, double) { return std::log(-std::log(x)); },
          0.0, 0.5, 1e-13));
    };
    e.rhs = [] {
      const double mlog_u = ln2;
      return exact(0.5 * std::log(mlog_u) - expint_ei(-mlog_u));
    };
    e.tags = {"integral", "log-log"};
  }

  {
    // Close to the upper limit of integration the integrand needs the stable
    // -log x, and u itself sits 2^-10 below 1, so the distance to 1 is the
    // quadrature's distance to u plus that gap (both exact in binary).
    const double gap = 0.0009765625;
    const double u = 1.0 - gap;
    auto& e = add_entry(v, "E3.19.5b",
                        "int_0^u log(-log x) dx = u log(-log u) - li(u); "
                        "u = 1 - 2^-10");
    e.lhs = [gap, u] {
      return measured(integrate_finite(
          [gap](double x, double, double to_u) {
            return std::log(minus_log(x, to_u + gap));
          },
          0.0, u, 1e-13));
    };
    e.rhs = [gap, u] {
      const double log_u = std::log1p(-gap);
      return exact(u * std::log(-log_u) - expint_ei(log_u));
    };
    e.tags = {"integral", "log-log"};
  }

  {
    auto& e = add_entry(v, "E3.19.8",
                        "gamma = -int_0^1 log(-log x) dx");
    e.lhs = [] { return exact(euler); };
    e.rhs = [] {
      const QuadOutcome q = integrate_finite(
          [](double x, double, double to1) {
            return std::log(minus_log(x, to1));
          },
          0.0, 1.0, 1e-13);
      return Measured{-q.value, q.err_estimate};
    };
    e.tags = {"integral", "log-log"};
  }

  {
    auto& e = add_entry(v, "E3.19.9",
                        "lim_{u->1^-} [li(u) - log(-log u)] = gamma");
    e.lhs = [] {
      // At u = 1 - 1/N both terms diverge like log log; their difference
      // carries about 4e-15 of absolute noise from the large cancelling logs.
      const auto F = [](long n) {
        const double log_u = std::log1p(-1.0 / double(n));
        return expint_ei(log_u) - std::log(-log_u);
      };
      return measured(
          limit_richardson(F, scaled_terms(1L << 20), 6, inv_power_basis,
                           4e-15));
    };
    e.rhs = [] { return exact(euler); };
    e.tags = {"limit", "log-log"};
  }

  {
    auto& e = add_entry(v, "E3.19.12",
                        "gamma = lim_{u->0^+} [Ei(-u) - log u]");
    e.lhs = [] { return exact(euler); };
    e.rhs = [] {
      const auto F = [](long n) {
        return expint_ei(-1.0 / double(n)) + std::log(double(n));
      };
      return measured(
          limit_richardson(F, scaled_terms(1L << 20), 6, inv_power_basis,
                           4e-15));
    };
    e.tags = {"limit", "log-log"};
  }

  {
    auto& e = add_entry(
        v, "E3.19.14",
        "sum H_k/k! - sum log(k)/k! - gamma(e-1) = "
        "int_0^inf (exp(e^-x) - 1)(1/x - 1/(e^x-1)) dx");
    e.lhs = [] {
      const double s = harmonic_over_factorial() - log_over_factorial() -
                       euler * (std::exp(1.0) - 1.0);
      return Measured{s, 4e-16 * (std::exp(1.0) + 1.0)};
    };
    e.rhs = [] {
      // binet_kernel is 1/(e^x-1) - 1/x evaluated without the cancellation
      // that wrecks the naive bracket near 0.
      return measured(integrate_half_line(
          [](double x) {
            return -std::expm1(std::exp(-x)) * binet_kernel(x);
          },
          0.0, 1.0, 1e-13));
    };
    e.tags = {"integral", "log-log"};
  }

  {
    auto& e = add_entry(v, "E3.19.15",
                        "int_0^1 e^t log(-log t) dt = "
                        "-sum log(k)/k! - gamma(e-1)");
    e.lhs = [] {
      return measured(integrate_finite(
          [](double x, double, double to1) {
            return std::exp(x) * std::log(minus_log(x, to1));
          },
          0.0, 1.0, 1e-13));
    };
    e.rhs = [] {
      return exact(-log_over_factorial() - euler * (std::exp(1.0) - 1.0));
    };
    e.tags = {"integral", "log-log"};
  }

  {
    auto& e = add_entry(v, "E3.19.16",
                        "sum H_k/k! = e (gamma - Ei(-1))");
    e.lhs = [] { return exact(harmonic_over_factorial()); };
    e.rhs = [] { return exact(std::exp(1.0) * (euler - expint_ei(-1.0))); };
    e.tags = {"log-log"};
  }

  {
    auto& e = add_entry(v, "E3.19.18",
                        "sum H_k/k! = e gamma + e int_1^inf e^-t log t dt");
    e.lhs = [] { return exact(harmonic_over_factorial()); };
    e.rhs = [] {
      const QuadOutcome q = integrate_half_line(
          [](double t) { return std::exp(-t) * std::log(t); }, 1.0, 1.0,
          1e-13);
      const double ke = std::exp(1.0);
      return Measured{ke * (euler + q.value), ke * q.err_estimate};
    };
    e.tags = {"integral", "log-log"};
  }

  {
    auto& e = add_entry(v, "E3.19.19.2",
                        "int_0^1 e^-x log x dx = Ei(-1) - gamma");
    e.lhs = [] {
      return measured(integrate_finite(
          [](double x, double, double to1) {
            const double lx = (x < 0.5) ? std::log(x) : std::log1p(-to1);
            return std::exp(-x) * lx;
          },
          0.0, 1.0, 1e-13));
    };
    e.rhs = [] { return exact(expint_ei(-1.0) - euler); };
    e.tags = {"integral", "log-log"};
  }

  {
    auto& e = add_entry(v, "EGompertz",
                        "int_0^inf e^-x/(1+x) dx = -e Ei(-1)");
    e.lhs = [] {
      return measured(integrate_half_line(
          [](double x) { return std::exp(-x) / (1.0 + x); }, 0.0, 1.0,
          1e-13));
    };
    e.rhs = [] { return exact(-std::exp(1.0) * expint_ei(-1.0)); };
    e.tags = {"integral", "log-log"};
  }

  {
    auto& e = add_entry(v, "XGompertzDigits",
                        "-e Ei(-1) = 0.59634762 (printed decimal)");
    e.status = EntryStatus::suspect;
    e.lhs = [] { return exact(-std::exp(1.0) * expint_ei(-1.0)); };
    e.rhs = [] { return Measured{0.59634762, 5e-9}; };
    e.tol_abs = 1e-9;
    e.tol_rel = 1e-9;
    e.notes = [](double lhs, double rhs) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "computed minus printed = %.3e; the printed decimal "
                    "diverges from the computed value in the 7th place",
                    lhs - rhs);
      return std::string(buf);
    };
    e.tags = {"log-log", "suspect"};
  }
}

} // namespace sumcheck
