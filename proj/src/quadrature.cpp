#include "fermigas/quadrature.hpp"

#include <numbers>

namespace fermigas::quad {
namespace {

Rule build_rule() {
  Rule rule;
  constexpr std::size_t n = kRuleSize;
  for (std::size_t i = 0; i < n; ++i) {
    // Chebyshev-like starting guess for the i-th root of P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const Rule& gauss_legendre_rule() {
  static const Rule rule = build_rule();
  return rule;
}

}  // namespace fermigas::quad
