#pragma once

namespace sumcheck {

// One representation's result for a shared constant, with that
// representation's own error estimate.
struct RouteValue {
  double value = 0.0;
  double err = 0.0;
};

// Routes to S = sum_{n>=1} log(n+1)/(n(n+1)). Each one evaluates a
// structurally different representation; the verify entries and the
// `constant S` command cross-check them against each other.
RouteValue log_sum_reference();       // the defining series, EM tail
RouteValue log_sum_quadrature();      // integral of (1-x)log(1-x)/(x log x) on (0,1)
RouteValue log_sum_alternating();     // sum (-1)^(n+1) zeta(n+1)/n, accelerated
RouteValue log_sum_zeta_prime();      // -sum_{n>=2} zeta'(n)
RouteValue log_sum_em();              // sum log(1+1/n)/n, EM tail
RouteValue log_sum_gamma_integral();  // -gamma + int_0^inf e^-x log x log(1-e^-x)
RouteValue log_sum_harmonic();        // -sum H_n [log(n+2)/(n+2) - log(n+1)/(n+1)]

// Routes to the first Stieltjes constant gamma_1.
RouteValue stieltjes1_em();           // the library evaluator
RouteValue stieltjes1_richardson();   // extrapolated limit of sum log k/k - (log^2 N)/2
RouteValue stieltjes1_series_limit(); // the same limit, telescoped into a series
RouteValue stieltjes1_quadrature();   // half-line integral solved for gamma_1

// Routes to int_0^1 psi^2(1+x) dx.
RouteValue psi_square_quadrature();
RouteValue psi_square_identity();     // 2S + 1 - 2 zeta(2) + 2 gamma_1
// Series in the Cauchy numbers |c_n|/n^2; em_tail=false reports the bare
// truncation so the historical short-budget value can be shown honestly.
RouteValue psi_square_series(long n_terms, bool em_tail);

} // namespace sumcheck
