#pragma once

namespace sumcheck {

// log G(x) for x > 0, where G is the double gamma function:
// G(1) = G(2) = 1, G(x+1) = Gamma(x) G(x).
double log_barnes_g(double x);

} // namespace sumcheck
