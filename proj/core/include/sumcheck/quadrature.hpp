#pragma once

#include <functional>

namespace sumcheck {

struct QuadOutcome {
  double value = 0.0;
  double err_estimate = 0.0;
  int levels = 0;
  long evals = 0;
};

// Integrand over (a,b) that receives the abscissa together with its exact
// distances to both endpoints. Near an endpoint the abscissa itself rounds
// to a or b while the distance stays meaningful down to ~1e-290, which is
// what integrable endpoint singularities like log(1-x) need.
using EndpointAwareFn = std::function<double(double x, double from_a, double to_b)>;

// Tanh-sinh rule on (a,b). Levels halve the step until successive estimates
// agree to target_abs_err; err_estimate is the last inter-level difference.
QuadOutcome integrate_finite(const EndpointAwareFn& f, double a, double b,
                             double target_abs_err = 1e-12, int max_level = 12);

// Same rule for integrands that never look at the endpoint distances.
QuadOutcome integrate_finite(const std::function<double(double)>& f, double a,
                             double b, double target_abs_err = 1e-12,
                             int max_level = 12);

// Exp-sinh rule on (a, inf) for integrands with an eventually exponential
// tail. decay_hint is the e-folding rate of that tail; nodes beyond the
// point where decay_hint * (x - a) would underflow exp() are dropped.
QuadOutcome integrate_half_line(const std::function<double(double)>& f, double a,
                                double decay_hint = 1.0,
                                double target_abs_err = 1e-11,
                                int max_level = 12);

} // namespace sumcheck
