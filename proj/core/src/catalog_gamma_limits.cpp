// Limits, series and integrals that pin down gamma and gamma1 through
// harmonic-sum asymptotics. Everything here reduces to combinations of
// zeta(2), gamma, gamma1 and zeta'(2).

#include "catalog_util.hpp"

#include "sumcheck/combinatorics.hpp"
#include "sumcheck/constants.hpp"
#include "sumcheck/gamma.hpp"
#include "sumcheck/polylog.hpp"
#include "sumcheck/zeta.hpp"

namespace sumcheck {

namespace {

// Richardson basis for partial sums of log-weighted harmonic tails: the
// residuals expand in log(n)/n^j and 1/n^j.
double log_over_n_basis(int i, double n) {
  double l = std::log(n);
  switch (i) {
    case 1: return l / n;
    case 2: return 1.0 / n;
    case 3: return l / (n * n);
    case 4: return 1.0 / (n * n);
    default: return l * l / (n * n * n);
  }
}

} // namespace

void register_gamma_limits(std::vector<IdentityRecord>& v) {
  {
    auto& e = add_entry(v, "E2.1",
                        "sum_{k>=1} H_k (log((k+1)/k) - 1/k) = "
                        "-[zeta(2) + gamma^2]/2 - gamma1");
    e.lhs = [] {
      return measured(sum_monotone_em(
          [](long k) {
            double x = 1.0 / double(k);
            return harmonic_smooth(double(k)) * (std::log1p(x) - x);
          },
          [](double x) {
            double r = 1.0 / x;
            return harmonic_smooth(x) * (std::log1p(r) - r);
          },
          1, scaled_terms(8000)));
    };
    e.rhs = [] {
      return exact(-0.5 * (zeta2 + euler * euler) - stieltjes1);
    };
    e.tags = {"series", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E2.8",
                        "lim_n [sum_{k<=n} H_k/k - gamma log n - log^2(n)/2] "
                        "= [zeta(2) + gamma^2]/2");
    e.lhs = [] {
      auto partial = [](long n) {
        double s = 0.0, cs = 0.0;
        double h = 0.0, ch = 0.0;
        for (long k = 1; k <= n; ++k) {
          double yh = 1.0 / double(k) - ch;
          double th = h + yh;
          ch = (th - h) - yh;
          h = th;
          double ys = h / double(k) - cs;
          double ts = s + ys;
          cs = (ts - s) - ys;
          s = ts;
        }
        double ln = std::log(double(n));
        return s - euler * ln - 0.5 * ln * ln;
      };
      return measured(
          limit_richardson(partial, scaled_terms(1L << 15), 6,
                           log_over_n_basis, 1e-13));
    };
    e.rhs = [] { return exact(0.5 * (zeta2 + euler * euler)); };
    e.tags = {"limit", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E2.11",
                        "lim_n [H_n^2/2 - gamma log n - log^2(n)/2] = "
                        "gamma^2/2");
    e.lhs = [] {
      auto partial = [](long n) {
        double h = harmonic_smooth(double(n));
        double ln = std::log(double(n));
        return 0.5 * h * h - euler * ln - 0.5 * ln * ln;
      };
      return measured(
          limit_richardson(partial, scaled_terms(1L << 17), 6,
                           log_over_n_basis, 2e-14));
    };
    e.rhs = [] { return exact(0.5 * euler * euler); };
    e.tags = {"limit"};
  }

  {
    auto& e = add_entry(v, "E2.13",
                        "lim_n [H_n^2/2 - gamma log n - sum_{k<=n} log(k)/k] "
                        "= gamma^2/2 - gamma1");
    e.lhs = [] {
      auto partial = [](long n) {
        double s = 0.0, cs = 0.0;
        for (long k = 2; k <= n; ++k) {
          double y = std::log(double(k)) / double(k) - cs;
          double t = s + y;
          cs = (t - s) - y;
          s = t;
        }
        double h = harmonic_smooth(double(n));
        return 0.5 * h * h - euler * std::log(double(n)) - s;
      };
      return measured(
          limit_richardson(partial, scaled_terms(1L << 15), 6,
                           log_over_n_basis, 1e-13));
    };
    e.rhs = [] { return exact(0.5 * euler * euler - stieltjes1); };
    e.tags = {"limit", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E2.14",
                        "sum_{k>=1} (H_k - gamma - log k)/k = "
                        "[zeta(2) - gamma^2]/2 - gamma1");
    e.lhs = [] {
      return measured(sum_monotone_em(
          [](long k) {
            return (harmonic_smooth(double(k)) - euler - std::log(double(k))) /
                   double(k);
          },
          [](double x) {
            return (harmonic_smooth(x) - euler - std::log(x)) / x;
          },
          1, scaled_terms(8000)));
    };
    e.rhs = [] { return exact(0.5 * (zeta2 - euler * euler) - stieltjes1); };
    e.tags = {"series", "stieltjes"};
  }

  // H_k - log k - gamma as a Laplace-type integral, spot checked at a few k.
  for (long k : {1L, 3L, 10L}) {
    const char* suffix = (k == 1) ? "a" : (k == 3) ? "b" : "c";
    auto& e = add_entry(v, std::string("E2.15") + suffix,
                        "int_0^inf e^{-kx} (1/x - 1/(e^x-1)) dx = "
                        "H_k - log k - gamma, k = " +
                            std::to_string(k));
    e.lhs = [k] {
      return measured(integrate_half_line(
          [k](double x) { return -std::exp(-double(k) * x) * binet_kernel(x); },
          0.0, double(k), 1e-13));
    };
    e.rhs = [k] {
      return exact(harmonic(k) - std::log(double(k)) - euler);
    };
    e.tags = {"integral"};
  }

  {
    auto& e = add_entry(v, "E2.16",
                        "int_0^inf log(1-e^{-x}) (1/(e^x-1) - 1/x) dx = "
                        "[zeta(2) - gamma^2]/2 - gamma1");
    e.lhs = [] {
      return measured(integrate_half_line(
          [](double x) {
            double lg = x < 0.5 ? std::log(-std::expm1(-x))
                                : std::log1p(-std::exp(-x));
            return lg * binet_kernel(x);
          },
          0.0, 1.0, 1e-13));
    };
    e.rhs = [] { return exact(0.5 * (zeta2 - euler * euler) - stieltjes1); };
    e.tags = {"integral", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E2.16.1",
                        "int_0^1 (1/u + 1/((1-u)log(1-u))) log u du = "
                        "[zeta(2) - gamma^2]/2 - gamma1");
    e.lhs = [] {
      return measured(integrate_finite(
          [](double u, double, double to1) {
            double bracket;
            if (u < 0.5) {
              double lg1mu = std::log1p(-u);
              bracket = cancelled_pole_numerator(u) / (u * to1 * lg1mu);
            } else {
              bracket = 1.0 / u + 1.0 / (to1 * std::log(to1));
            }
            double lgu = u < 0.5 ? std::log(u) : std::log1p(-to1);
            return bracket * lgu;
          },
          0.0, 1.0, 1e-13));
    };
    e.rhs = [] { return exact(0.5 * (zeta2 - euler * euler) - stieltjes1); };
    e.tags = {"integral", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E2.16.2",
                        "int_0^1 (1/(1-v) + 1/(v log v)) log(1-v) dv = "
                        "[zeta(2) - gamma^2]/2 - gamma1");
    e.lhs = [] {
      return measured(integrate_finite(
          [](double vv, double, double to1) {
            // substitute w = 1-v; the delicate end is v -> 1
            double w = to1;
            double lgv = vv < 0.5 ? std::log(vv) : std::log1p(-w);
            double bracket;
            if (w < 0.5) {
              bracket = cancelled_pole_numerator(w) / (w * vv * lgv);
            } else {
              bracket = 1.0 / w + 1.0 / (vv * lgv);
            }
            double lg1mv = vv < 0.5 ? std::log1p(-vv) : std::log(w);
            return bracket * lg1mv;
          },
          0.0, 1.0, 1e-13));
    };
    e.rhs = [] { return exact(0.5 * (zeta2 - euler * euler) - stieltjes1); };
    e.tags = {"integral", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E2.16.3",
                        "int_0^inf e^{-x} (1/(1-e^{-x}) - 1/x) log x dx = "
                        "-gamma^2 - gamma1");
    e.lhs = [] {
      return measured(integrate_half_line(
          [](double x) {
            // e^{-x}/(1-e^{-x}) - e^{-x}/x = e^{-x} (1 + 1/(e^x-1) - 1/x)
            return std::exp(-x) * (1.0 + binet_kernel(x)) * std::log(x);
          },
          0.0, 1.0, 1e-13));
    };
    e.rhs = [] { return exact(-euler * euler - stieltjes1); };
    e.tags = {"integral", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E2.16.4",
                        "int_0^1 (1/(1-u) + 1/log u) log(-log u) du = "
                        "-gamma^2 - gamma1");
    e.lhs = [] {
      return measured(integrate_finite(
          [](double u, double, double to1) {
            double nl = u < 0.5 ? -std::log(u) : -std::log1p(-to1);
            double bracket;
            if (u < 0.5) {
              bracket = 1.0 / to1 - 1.0 / nl;
            } else {
              double w = to1;
              double m = log1p_minus_linear(w); // log u = m - w
              bracket = m / (w * (m - w));
            }
            return bracket * std::log(nl);
          },
          0.0, 1.0, 1e-13));
    };
    e.rhs = [] { return exact(-euler * euler - stieltjes1); };
    e.tags = {"integral", "stieltjes"};
  }

  {
    auto& e = add_entry(v, "E2.17",
                        "int_0^inf Li_2(e^{-x}) (1/x - 1/(e^x-1)) dx = "
                        "2 zeta(3) + zeta'(2) - gamma zeta(2)");
    e.lhs = [] {
      return measured(integrate_half_line(
          [](double x) { return -polylog(2, std::exp(-x)) * binet_kernel(x); },
          0.0, 1.0, 1e-13));
    };
    e.rhs = [] {
      // zeta'(2) comes out of a truncated sum, so grant it a real budget
      return Measured{2.0 * zeta3 + riemann_zeta_prime(2.0) - euler * zeta2,
                      1e-12};
    };
    e.tags = {"integral"};
  }
}

} // namespace sumcheck
