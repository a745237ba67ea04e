#pragma once

namespace sumcheck {

// Li_n(x) for integer n >= 1 and real x <= 1 (x < 1 when n == 1).
double polylog(int n, double x);

} // namespace sumcheck
