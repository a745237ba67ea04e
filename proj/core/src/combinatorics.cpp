#include "sumcheck/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sumcheck {

double harmonic(long n) {
  double s = 0.0;
  for (long k = n; k >= 1; --k) s += 1.0 / static_cast<double>(k);
  return s;
}

double harmonic(long n, int r) {
  double s = 0.0;
  for (long k = n; k >= 1; --k) s += std::pow(static_cast<double>(k), -r);
  return s;
}

double harmonic_offset(long n, int r, double x) {
  double s = 0.0;
  for (long j = n - 1; j >= 0; --j) s += std::pow(static_cast<double>(j) + x, -r);
  return s;
}

namespace {

constexpr int kExactN = 20;
constexpr int kWideN = 120;

// Unsigned triangle |s(n,k)| built once: |s(n+1,k)| = |s(n,k-1)| + n|s(n,k)|.
// All terms positive, so the double version loses nothing to cancellation.
struct Stirling1Tables {
  std::vector<std::int64_t> exact; // (kExactN+1)^2
  std::vector<double> wide;        // (kWideN+1)^2

  Stirling1Tables()
      : exact(static_cast<size_t>((kExactN + 1) * (kExactN + 1)), 0),
        wide(static_cast<size_t>((kWideN + 1) * (kWideN + 1)), 0.0) {
    exact[0] = 1; // |s(0,0)| = 1
    for (int n = 0; n < kExactN; ++n)
      for (int k = 0; k <= n; ++k) {
        const std::int64_t v = exact[static_cast<size_t>(n * (kExactN + 1) + k)];
        if (v == 0) continue;
        exact[static_cast<size_t>((n + 1) * (kExactN + 1) + k + 1)] += v;
        exact[static_cast<size_t>((n + 1) * (kExactN + 1) + k)] +=
            static_cast<std::int64_t>(n) * v;
      }
    wide[0] = 1.0;
    for (int n = 0; n < kWideN; ++n)
      for (int k = 0; k <= n; ++k) {
        const double v = wide[static_cast<size_t>(n * (kWideN + 1) + k)];
        if (v == 0.0) continue;
        wide[static_cast<size_t>((n + 1) * (kWideN + 1) + k + 1)] += v;
        wide[static_cast<size_t>((n + 1) * (kWideN + 1) + k)] += n * v;
      }
  }
};

const Stirling1Tables& stirling_tables() {
  static const Stirling1Tables t;
  return t;
}

} // namespace

std::int64_t stirling1_exact(int n, int k) {
  if (n < 0 || n > kExactN || k < 0) throw std::out_of_range("stirling1_exact");
  if (k > n) return 0;
  const std::int64_t a =
      stirling_tables().exact[static_cast<size_t>(n * (kExactN + 1) + k)];
  return ((n - k) % 2 == 0) ? a : -a;
}

double stirling1(int n, int k) {
  if (n < 0 || n > kWideN || k < 0) throw std::out_of_range("stirling1");
  if (k > n) return 0.0;
  const double a = stirling_tables().wide[static_cast<size_t>(n * (kWideN + 1) + k)];
  return ((n - k) % 2 == 0) ? a : -a;
}

double factorial(int n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(171);
    t[0] = 1.0;
    for (int i = 1; i <= 170; ++i) t[static_cast<size_t>(i)] = t[static_cast<size_t>(i - 1)] * i;
    return t;
  }();
  if (n < 0) throw std::out_of_range("factorial");
  if (n <= 170) return table[static_cast<size_t>(n)];
  return std::numeric_limits<double>::infinity();
}

double log_factorial(int n) {
  if (n < 0) throw std::out_of_range("log_factorial");
  if (n <= 170) return std::log(factorial(n));
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

std::vector<double> bell_complete_all(int r, const std::vector<double>& xs) {
  if (r < 0) throw std::out_of_range("bell_complete_all");
  if (static_cast<int>(xs.size()) < r) throw std::out_of_range("bell_complete_all: xs too short");
  std::vector<double> y(static_cast<size_t>(r) + 1);
  y[0] = 1.0;
  for (int m = 0; m < r; ++m) {
    // Y_{m+1} = sum_{j=0}^{m} C(m,j) Y_{m-j} x_{j+1}
    double acc = 0.0;
    for (int j = 0; j <= m; ++j)
      acc += binomial(m, j) * y[static_cast<size_t>(m - j)] * xs[static_cast<size_t>(j)];
    y[static_cast<size_t>(m) + 1] = acc;
  }
  return y;
}

double bell_complete(int r, const std::vector<double>& xs) {
  return bell_complete_all(r, xs)[static_cast<size_t>(r)];
}

} // namespace sumcheck
