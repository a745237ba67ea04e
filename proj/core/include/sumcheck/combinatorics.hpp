#pragma once

#include <cstdint>
#include <vector>

namespace sumcheck {

// H_n; H_0 = 0.
double harmonic(long n);

// H_n^(r) = sum_{k=1}^n k^{-r}.
double harmonic(long n, int r);

// sum_{j=0}^{n-1} (j+x)^{-r}: the first n terms of the Hurwitz-style
// harmonic number with offset x. n = 0 gives 0.
double harmonic_offset(long n, int r, double x);

// Signed Stirling numbers of the first kind s(n,k):
// x(x-1)...(x-n+1) = sum_k s(n,k) x^k.
// Exact in int64 for n <= 20; as doubles for n <= 120.
std::int64_t stirling1_exact(int n, int k);
double stirling1(int n, int k);

double binomial(int n, int k);
double factorial(int n);
double log_factorial(int n);

// Complete Bell polynomial Y_r(x_1, ..., x_r); Y_0 = 1. xs[i] holds x_{i+1};
// xs may be longer than r. bell_complete_all returns Y_0..Y_r.
double bell_complete(int r, const std::vector<double>& xs);
std::vector<double> bell_complete_all(int r, const std::vector<double>& xs);

} // namespace sumcheck
