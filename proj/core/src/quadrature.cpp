#include "sumcheck/quadrature.hpp"

#include <cmath>
#include <vector>

namespace sumcheck {
namespace {

constexpr double kPiHalf = 1.5707963267948966;

// Abscissas with 2s > kSatCutoff contribute weights below ~1e-304 and their
// endpoint distances underflow; skip them instead of feeding garbage to f.
constexpr double kSatCutoff = 700.0;

struct TanhSinhNode {
  double from_a_unit; // (x - a) / (b - a)
  double to_b_unit;   // (b - x) / (b - a)
  double weight_unit; // dx/dt / (b - a)
};

// Node for |t| = t_abs on the tanh-sinh contour, or weight 0 if saturated.
bool tanh_sinh_node(double t_abs, TanhSinhNode& node) {
  const double s = kPiHalf * std::sinh(t_abs);
  if (2.0 * s > kSatCutoff) return false;
  const double e2s = std::exp(2.0 * s);
  node.to_b_unit = 1.0 / (1.0 + e2s);       // for t = +t_abs
  node.from_a_unit = e2s / (1.0 + e2s);     // = 1 - to_b_unit, no cancellation
  const double ch = std::cosh(s);
  node.weight_unit = kPiHalf * std::cosh(t_abs) / (2.0 * ch * ch);
  return true;
}

} // namespace

QuadOutcome integrate_finite(const EndpointAwareFn& f, double a, double b,
                             double target_abs_err, int max_level) {
  const double width = b - a;
  QuadOutcome out;

  // When f blows up at a node (x rounded exactly onto a singular endpoint)
  // the node is skipped, but the skipped mass still has to show up in the
  // error claim. Charge each skip with the nearest finite same-side
  // contribution seen so far; near an integrable singularity that neighbor
  // bounds the skipped node.
  double drop_allowance = 0.0;
  double last_mag[2] = {0.0, 0.0};
  double h = 1.0;

  auto eval_at = [&](double t_signed, long& evals) -> double {
    TanhSinhNode n;
    if (!tanh_sinh_node(std::fabs(t_signed), n)) return 0.0;
    double from_a_unit = n.from_a_unit, to_b_unit = n.to_b_unit;
    if (t_signed < 0.0) std::swap(from_a_unit, to_b_unit);
    // Build x from whichever endpoint is closer: a + width*u keeps the
    // approach resolved down to ~1e-304, where c + d*(u - v) would round
    // onto the endpoint already at u ~ 1e-17.
    const double x = (from_a_unit <= to_b_unit) ? a + width * from_a_unit
                                                : b - width * to_b_unit;
    const double v = f(x, width * from_a_unit, width * to_b_unit);
    ++evals;
    const int side = t_signed < 0.0 ? 0 : 1;
    if (!std::isfinite(v)) {
      drop_allowance += last_mag[side] * h * width;
      return 0.0;
    }
    last_mag[side] = std::fabs(v * n.weight_unit);
    return v * n.weight_unit;
  };

  const double t_max = 6.11; // sinh gives 2s ~ 700 here; nodes beyond saturate
  double sum = eval_at(0.0, out.evals);
  for (double t = h; t <= t_max; t += h)
    sum += eval_at(t, out.evals) + eval_at(-t, out.evals);
  double prev = sum * h * width;

  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    // New nodes sit at odd multiples of h.
    double add = 0.0;
    for (double t = h; t <= t_max; t += 2.0 * h)
      add += eval_at(t, out.evals) + eval_at(-t, out.evals);
    sum += add;
    const double cur = sum * h * width;
    out.err_estimate = std::fabs(cur - prev);
    out.value = cur;
    out.levels = level;
    prev = cur;
    if (level >= 3 &&
        out.err_estimate <= std::fmax(target_abs_err, 4e-16 * std::fabs(cur)))
      break;
  }
  // Inter-level agreement can land on exactly zero; round-off never does.
  out.err_estimate += 2e-16 * std::fabs(out.value) + drop_allowance;
  return out;
}

QuadOutcome integrate_finite(const std::function<double(double)>& f, double a,
                             double b, double target_abs_err, int max_level) {
  return integrate_finite(
      [&f](double x, double, double) { return f(x); }, a, b, target_abs_err,
      max_level);
}

QuadOutcome integrate_half_line(const std::function<double(double)>& f, double a,
                                double decay_hint, double target_abs_err,
                                int max_level) {
  QuadOutcome out;
  const double lambda = std::fmax(decay_hint, 1e-8);

  // Same skip accounting as the finite-interval case: a node whose f came
  // back non-finite is charged with its nearest finite neighbor.
  double drop_allowance = 0.0;
  double last_mag = 0.0;
  double h = 1.0;

  auto eval_at = [&](double t, long& evals) -> double {
    const double s = kPiHalf * std::sinh(t);
    if (s > kSatCutoff) return 0.0; // abscissa overflow territory
    const double r = std::exp(s);  // x - a
    if (lambda * r > 745.0) return 0.0; // integrand tail has underflowed
    const double v = f(a + r);
    ++evals;
    if (!std::isfinite(v)) {
      drop_allowance += last_mag * h;
      return 0.0;
    }
    last_mag = std::fabs(v * r * kPiHalf * std::cosh(t));
    return v * r * kPiHalf * std::cosh(t);
  };

  const double t_max = 6.11;
  double sum = eval_at(0.0, out.evals);
  for (double t = h; t <= t_max; t += h)
    sum += eval_at(t, out.evals) + eval_at(-t, out.evals);
  double prev = sum * h;

  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (double t = h; t <= t_max; t += 2.0 * h)
      add += eval_at(t, out.evals) + eval_at(-t, out.evals);
    sum += add;
    const double cur = sum * h;
    out.err_estimate = std::fabs(cur - prev);
    out.value = cur;
    out.levels = level;
    prev = cur;
    if (level >= 3 &&
        out.err_estimate <= std::fmax(target_abs_err, 4e-16 * std::fabs(cur)))
      break;
  }
  // Inter-level agreement can land on exactly zero; round-off never does.
  out.err_estimate += 2e-16 * std::fabs(out.value) + drop_allowance;
  return out;
}

} // namespace sumcheck
