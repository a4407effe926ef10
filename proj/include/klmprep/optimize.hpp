#pragma once

#include <cmath>
#include <utility>

namespace klm {

/// Result of a one-dimensional search.
struct ScalarMaximum {
  double x;
  double value;
};

/// Golden-section refinement of a maximum inside [lo, hi]. Assumes f is
/// unimodal on the bracket.
template <typename F>
ScalarMaximum golden_section_maximize(F&& f, double lo, double hi,
                                      double x_tol = 1e-12) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > x_tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

/// Maximizes f over [lo, hi] for functions that need not be unimodal: seeds
/// with a uniform grid, then golden-section refines around the best sample.
template <typename F>
ScalarMaximum grid_seeded_maximize(F&& f, double lo, double hi,
                                   int grid_points = 512,
                                   double x_tol = 1e-12) {
  if (grid_points < 2) grid_points = 2;
  double best_x = lo;
  double best_v = f(lo);
  const double step = (hi - lo) / (grid_points - 1);
  for (int i = 1; i < grid_points; ++i) {
    const double x = (i == grid_points - 1) ? hi : lo + i * step;
    const double v = f(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }
  const double a = std::max(lo, best_x - step);
  const double b = std::min(hi, best_x + step);
  ScalarMaximum refined = golden_section_maximize(f, a, b, x_tol);
  if (refined.value >= best_v) return refined;
  return {best_x, best_v};
}

}  // namespace klm
