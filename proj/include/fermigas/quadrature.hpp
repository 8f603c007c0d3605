#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <algorithm>

namespace fermigas::quad {

inline constexpr std::size_t kRuleSize = 20;

struct Rule {
  std::array<double, kRuleSize> nodes{};    // on [-1, 1]
  std::array<double, kRuleSize> weights{};
};

/// 20-point Gauss-Legendre rule, built once by Newton iteration on P_20.
const Rule& gauss_legendre_rule();

/// Single application of the fixed rule on [a, b].
template <class F>
double gauss_legendre(F&& f, double a, double b) {
  const Rule& rule = gauss_legendre_rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < kRuleSize; ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

namespace detail {

template <class F>
double adaptive_step(F& f, double a, double b, double whole, double abs_tol,
                     double rel_tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gauss_legendre(f, a, mid);
  const double right = gauss_legendre(f, mid, b);
  const double refined = left + right;
  const double err = std::abs(refined - whole);
  // Differences below a few ulps of the panel value are roundoff, not error.
  const double floor = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(refined);
  if (depth <= 0 || err <= abs_tol || err <= std::max(rel_tol * std::abs(refined), floor)) {
    return refined;
  }
  return adaptive_step(f, a, mid, left, 0.5 * abs_tol, rel_tol, depth - 1) +
         adaptive_step(f, mid, b, right, 0.5 * abs_tol, rel_tol, depth - 1);
}

}  // namespace detail

/// Adaptive bisection with a 20-point Gauss-Legendre panel. A panel is
/// accepted once its two halves agree with it to abs_tol (halved per level)
/// or to rel_tol relative to the panel value.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol, double rel_tol = 0.0,
                 int max_depth = 40) {
  if (a == b) return 0.0;
  const double whole = gauss_legendre(f, a, b);
  return detail::adaptive_step(f, a, b, whole, abs_tol, rel_tol, max_depth);
}

}  // namespace fermigas::quad
