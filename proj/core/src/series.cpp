#include "sumcheck/series.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <vector>

#include "sumcheck/quadrature.hpp"

namespace sumcheck {

namespace {
std::atomic<double> g_budget_scale{1.0};
}

double budget_scale() { return g_budget_scale.load(std::memory_order_relaxed); }

void set_budget_scale(double s) {
  g_budget_scale.store(std::fmax(s, 0.25), std::memory_order_relaxed);
}

long scaled_terms(long nominal) {
  const double scaled = static_cast<double>(nominal) * budget_scale();
  return scaled < 4.0 ? 4 : static_cast<long>(scaled);
}

SumOutcome sum_monotone_em(const std::function<double(long)>& term,
                           const std::function<double(double)>& density,
                           long n0, long n_terms, long smooth_from) {
  SumOutcome out;
  if (smooth_from < n0) smooth_from = n0;
  const long last = n0 + n_terms - 1; // final directly-summed index
  const long tail_start = last + 1;

  double partial = 0.0, comp = 0.0; // Kahan
  for (long n = n0; n <= last; ++n) {
    const double y = term(n) - comp;
    const double t = partial + y;
    comp = (t - partial) - y;
    partial = t;
  }
  out.terms_used = n_terms;

  // Spot-check that the density really matches the terms where it claims to.
  double hint_err = 0.0;
  if (smooth_from <= last) {
    const long span = last - smooth_from;
    const long samples = span < 48 ? span + 1 : 48;
    for (long i = 0; i < samples; ++i) {
      const long n = smooth_from + (samples == 1 ? 0 : i * span / (samples - 1));
      const double tv = term(n);
      const double dv = density(static_cast<double>(n));
      const double rel = std::fabs(tv - dv) / (std::fabs(tv) + 1e-300);
      if (rel > hint_err) hint_err = rel;
    }
  }
  if (hint_err > 1e-6) {
    out.value = partial;
    out.err_estimate = std::numeric_limits<double>::infinity();
    return out;
  }

  // Euler-Maclaurin tail of the density from tail_start.
  const double N = static_cast<double>(tail_start);
  // integral_N^inf density = integral_0^1 density(N/u) N/u^2 du
  const auto tail_integrand = [&](double u, double from0, double) {
    const double uu = u == 0.0 ? from0 : u;
    if (uu <= 0.0) return 0.0;
    return density(N / uu) * N / (uu * uu);
  };
  const QuadOutcome q = integrate_finite(EndpointAwareFn(tail_integrand), 0.0,
                                         1.0, 1e-15);

  const double h = std::fmax(N / 64.0, 1.0);
  const double fp2 = density(N + 2 * h), fp1 = density(N + h);
  const double fm1 = density(N - h), fm2 = density(N - 2 * h);
  const double fph = density(N + 0.5 * h), fmh = density(N - 0.5 * h);
  // First derivative at two steps, Richardson-combined; their difference
  // bounds the O(h^4) truncation that a single stencil would hide.
  const double d1_h = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h);
  const double d1_h2 = (-fp1 + 8 * fph - 8 * fmh + fm1) / (6 * h);
  const double d1 = (16 * d1_h2 - d1_h) / 15.0;
  const double d3 = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * h * h * h);
  const double f0 = density(N);

  const double tail = q.value + 0.5 * f0 - d1 / 12.0 + d3 / 720.0;
  out.value = partial + tail;
  out.err_estimate = q.err_estimate + std::fabs(d3) / 720.0 +
                     std::fabs(d1_h2 - d1_h) / 12.0 +
                     hint_err * std::fabs(partial) + 1e-15 +
                     8e-16 * (std::fabs(partial) + std::fabs(tail));
  return out;
}

SumOutcome sum_alternating(const std::function<double(long)>& a, long n0,
                           int terms) {
  if (terms < 8) terms = 8;
  std::vector<double> av(static_cast<size_t>(terms));
  for (int k = 0; k < terms; ++k) av[static_cast<size_t>(k)] = a(n0 + k);

  const auto cvz = [&av](int n) -> double {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0, c = -d, s = 0.0;
    for (int k = 0; k < n; ++k) {
      c = b - c;
      s += c * av[static_cast<size_t>(k)];
      b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1));
    }
    return s / d;
  };

  SumOutcome out;
  const double full = cvz(terms);
  const double probe = cvz(terms - 6);
  out.value = full;
  out.terms_used = terms;
  out.err_estimate =
      std::fabs(full - probe) + 8e-16 * std::fabs(full) + 1e-306;
  return out;
}

SumOutcome limit_richardson(const std::function<double(long)>& F, long n_max,
                            int depth,
                            const std::function<double(int, double)>& basis,
                            double f_abs_err) {
  SumOutcome out;
  if (depth < 2) depth = 2;
  std::vector<long> ladder(static_cast<size_t>(depth));
  std::vector<double> fv(static_cast<size_t>(depth));
  double fmax = 0.0;
  for (int j = 0; j < depth; ++j) {
    ladder[static_cast<size_t>(j)] = n_max >> j;
    fv[static_cast<size_t>(j)] = F(ladder[static_cast<size_t>(j)]);
    fmax = std::fmax(fmax, std::fabs(fv[static_cast<size_t>(j)]));
    out.terms_used += ladder[static_cast<size_t>(j)];
  }

  // Solve  [1  basis(1,Nj) ... basis(d-1,Nj)] [L c1 ... c_{d-1}]^T = F(Nj)
  // by Gaussian elimination in long double, for the leading d rungs.
  const auto solve_for_limit = [&](int d) -> long double {
    std::vector<long double> m(static_cast<size_t>(d * (d + 1)));
    for (int j = 0; j < d; ++j) {
      const double Nj = static_cast<double>(ladder[static_cast<size_t>(j)]);
      m[static_cast<size_t>(j * (d + 1))] = 1.0L;
      for (int i = 1; i < d; ++i)
        m[static_cast<size_t>(j * (d + 1) + i)] = basis(i, Nj);
      m[static_cast<size_t>(j * (d + 1) + d)] = fv[static_cast<size_t>(j)];
    }
    for (int col = 0; col < d; ++col) {
      int piv = col;
      for (int r = col + 1; r < d; ++r)
        if (std::fabs(static_cast<double>(m[static_cast<size_t>(r * (d + 1) + col)])) >
            std::fabs(static_cast<double>(m[static_cast<size_t>(piv * (d + 1) + col)])))
          piv = r;
      if (piv != col)
        for (int c2 = col; c2 <= d; ++c2)
          std::swap(m[static_cast<size_t>(col * (d + 1) + c2)],
                    m[static_cast<size_t>(piv * (d + 1) + c2)]);
      const long double p = m[static_cast<size_t>(col * (d + 1) + col)];
      if (p == 0.0L) return std::numeric_limits<long double>::quiet_NaN();
      for (int r = 0; r < d; ++r) {
        if (r == col) continue;
        const long double factor = m[static_cast<size_t>(r * (d + 1) + col)] / p;
        for (int c2 = col; c2 <= d; ++c2)
          m[static_cast<size_t>(r * (d + 1) + c2)] -=
              factor * m[static_cast<size_t>(col * (d + 1) + c2)];
      }
    }
    return m[static_cast<size_t>(d)] / m[static_cast<size_t>(0)];
  };

  const long double deep = solve_for_limit(depth);
  const long double shallow = solve_for_limit(depth - 1);

  // Round-off amplification: |weights| of the linear combination that forms
  // the limit, from the transposed system.
  double kappa = 1.0;
  {
    const int d = depth;
    std::vector<long double> m(static_cast<size_t>(d * (d + 1)), 0.0L);
    for (int j = 0; j < d; ++j) {
      const double Nj = static_cast<double>(ladder[static_cast<size_t>(j)]);
      m[static_cast<size_t>(0 * (d + 1) + j)] = 1.0L;
      for (int i = 1; i < d; ++i)
        m[static_cast<size_t>(i * (d + 1) + j)] = basis(i, Nj);
    }
    m[static_cast<size_t>(d)] = 1.0L; // e_0 on the right-hand side
    for (int col = 0; col < d; ++col) {
      int piv = -1;
      double best = 0.0;
      for (int r = col; r < d; ++r) {
        const double v = std::fabs(static_cast<double>(m[static_cast<size_t>(r * (d + 1) + col)]));
        if (v > best) { best = v; piv = r; }
      }
      if (piv < 0) { kappa = 1e18; break; }
      if (piv != col)
        for (int c2 = 0; c2 <= d; ++c2)
          std::swap(m[static_cast<size_t>(col * (d + 1) + c2)],
                    m[static_cast<size_t>(piv * (d + 1) + c2)]);
      const long double p = m[static_cast<size_t>(col * (d + 1) + col)];
      for (int r = 0; r < d; ++r) {
        if (r == col) continue;
        const long double factor = m[static_cast<size_t>(r * (d + 1) + col)] / p;
        for (int c2 = 0; c2 <= d; ++c2)
          m[static_cast<size_t>(r * (d + 1) + c2)] -=
              factor * m[static_cast<size_t>(col * (d + 1) + c2)];
      }
    }
    if (kappa == 1.0) {
      long double acc = 0.0L;
      for (int j = 0; j < depth; ++j) {
        const long double w = m[static_cast<size_t>(j * (depth + 1) + depth)] /
                              m[static_cast<size_t>(j * (depth + 1) + j)];
        acc += std::fabs(static_cast<double>(w));
      }
      kappa = static_cast<double>(acc);
    }
  }

  out.value = static_cast<double>(deep);
  out.err_estimate = std::fabs(static_cast<double>(deep - shallow)) +
                     kappa * (f_abs_err + 2e-16 * fmax);
  return out;
}

} // namespace sumcheck
