#pragma once

#include <functional>

namespace sumcheck {

struct SumOutcome {
  double value = 0.0;
  double err_estimate = 0.0;
  long terms_used = 0;
};

// Global budget multiplier for series term counts (>= 0.25). The verify
// driver exposes it through SUMCHECK_BUDGET_SCALE; the convergence tests
// drive it programmatically to confirm that doubling a budget moves each
// result by no more than its reported error estimate.
double budget_scale();
void set_budget_scale(double s);

// Applies budget_scale() to a nominal term count.
long scaled_terms(long nominal);

// Sum of term(n) for n = n0..inf where the terms eventually follow the
// smooth positive density(x) (density(n) == term(n) for n >= smooth_from).
// The first n_terms terms are summed directly; the rest is an
// Euler-Maclaurin tail of the density: integral + density/2 - d'/12 + d'''/720,
// with the derivatives taken by central differences. A 48-point agreement
// check between term() and density() spreads over the direct range; any
// mismatch beyond 1e-6 relative poisons err_estimate (value = inf) so a
// wrong hint cannot silently pass.
SumOutcome sum_monotone_em(const std::function<double(long)>& term,
                           const std::function<double(double)>& density,
                           long n0, long n_terms, long smooth_from = -1);

// Sum of (-1)^(n-n0) a(n), a >= 0, by Cohen-Rodriguez Villegas-Zagier
// Chebyshev acceleration with the given number of terms. The error estimate
// compares against a run six terms shorter.
SumOutcome sum_alternating(const std::function<double(long)>& a, long n0,
                           int terms = 64);

// Extrapolates F(N) -> limit over the ladder N_j = n_max >> j, j = 0..depth-1,
// modeling F(N) = L + sum_{i>=1} c_i basis(i, N). basis(i, N) must be ordered
// by decreasing size. The error estimate combines the depth-(d-1) vs depth-d
// difference with the round-off amplification of the extrapolation weights;
// pass f_abs_err when F is itself a cancellation (a big partial sum minus a
// big correction) whose absolute noise exceeds 2e-16 |F|.
SumOutcome limit_richardson(const std::function<double(long)>& F, long n_max,
                            int depth,
                            const std::function<double(int, double)>& basis,
                            double f_abs_err = 0.0);

} // namespace sumcheck
