#include "fermigas/fermi_dirac.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fermigas/quadrature.hpp"

namespace fermigas {
namespace {

constexpr double kSeriesUpper = -1.0;
constexpr double kSommerfeldLower = 30.0;
constexpr double kTailWidth = 60.0;
constexpr int kSommerfeldTerms = 40;

// c_j = 2 (1 - 2^(1-2j)) zeta(2j), the Sommerfeld coefficients; c_0 = 1.
const std::array<double, kSommerfeldTerms>& sommerfeld_coefficients() {
  static const std::array<double, kSommerfeldTerms> coeffs = [] {
    std::array<double, kSommerfeldTerms> c{};
    c[0] = 1.0;
    for (int j = 1; j < kSommerfeldTerms; ++j) {
      const double two_j = 2.0 * j;
      c[j] = 2.0 * (1.0 - std::pow(2.0, 1.0 - two_j)) * std::riemann_zeta(two_j);
    }
    return c;
  }();
  return coeffs;
}

bool is_integer_order(FDOrder order) {
  const double k = order_value(order);
  return k == std::floor(k);
}

// sum_{j>=1} (-1)^(j+1) e^(j eta) / j^k, valid for eta < 0.
double fugacity_series(double k, double eta) {
  const double z = std::exp(eta);
  double zj = z;
  double sum = 0.0;
  for (int j = 1; j < 10000; ++j) {
    const double term = zj / std::pow(static_cast<double>(j), k);
    sum += (j % 2 == 1) ? term : -term;
    if (term <= 1e-17 * sum) break;
    zj *= z;
  }
  return sum;
}

double sommerfeld(FDOrder order, double eta) {
  const auto& c = sommerfeld_coefficients();
  const double k = order_value(order);
  if (is_integer_order(order)) {
    // Terminating polynomial plus the reflection term, exact for integer k.
    const int n = static_cast<int>(k);
    double poly = 0.0;
    for (int j = 0; 2 * j <= n; ++j) {
      const int p = n - 2 * j;
      poly += c[j] * std::pow(eta, p) / std::tgamma(p + 1.0);
    }
    const double reflection = fugacity_series(k, -eta);
    return (n % 2 == 1) ? poly + reflection : poly - reflection;
  }
  // Half-integer: asymptotic series in 1/eta^2, truncated at the smallest term.
  // eta^k / Gamma(k+1) * sum_j c_j * [k (k-1) ... (k-2j+1)] * eta^(-2j)
  const double inv_eta2 = 1.0 / (eta * eta);
  double sum = 1.0;
  double falling = 1.0;
  double power = 1.0;
  double last = 1.0;
  for (int j = 1; j < kSommerfeldTerms; ++j) {
    falling *= (k - (2.0 * j - 2.0)) * (k - (2.0 * j - 1.0));
    power *= inv_eta2;
    const double term = c[j] * falling * power;
    if (std::abs(term) > std::abs(last)) break;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    last = term;
  }
  return std::pow(eta, k) / std::tgamma(k + 1.0) * sum;
}

double quadrature(FDOrder order, double eta) {
  const double k = order_value(order);
  const double upper = std::max(eta, 0.0) + kTailWidth;
  double total = 0.0;
  auto accumulate = [&](auto&& integrand, double a, double edge, double b) {
    // Rough scale from a single panel sets the absolute tolerance.
    const double scale = std::abs(quad::gauss_legendre(integrand, a, b)) + 1e-300;
    const double tol = 1e-16 * scale;
    if (edge > a) total += quad::integrate(integrand, a, edge, tol, 1e-15);
    total += quad::integrate(integrand, std::max(edge, a), b, tol, 1e-15);
  };
  if (is_integer_order(order)) {
    const int power = static_cast<int>(k) - 1;
    auto integrand = [eta, power](double u) {
      return std::pow(u, power) / (std::exp(u - eta) + 1.0);
    };
    accumulate(integrand, 0.0, std::max(eta, 0.0), upper);
  } else {
    // u = x^2 removes the u^(k-1) endpoint singularity of half-integer orders.
    const double power = 2.0 * k - 1.0;
    auto integrand = [eta, power](double x) {
      return 2.0 * std::pow(x, power) / (std::exp(x * x - eta) + 1.0);
    };
    accumulate(integrand, 0.0, std::sqrt(std::max(eta, 0.0)), std::sqrt(upper));
  }
  return total / std::tgamma(k);
}

}  // namespace

FDOrder fd_order(double k) {
  for (FDOrder order : kAllFDOrders) {
    if (order_value(order) == k) return order;
  }
  throw std::domain_error("unsupported Fermi-Dirac order " + std::to_string(k));
}

std::optional<FDOrder> lower_order(FDOrder k) {
  switch (k) {
    case FDOrder::ThreeHalves: return FDOrder::Half;
    case FDOrder::Two: return FDOrder::One;
    case FDOrder::FiveHalves: return FDOrder::ThreeHalves;
    case FDOrder::Three: return FDOrder::Two;
    case FDOrder::Four: return FDOrder::Three;
    default: return std::nullopt;
  }
}

double fd(FDOrder order, double eta) {
  if (!std::isfinite(eta)) {
    throw std::domain_error("Fermi-Dirac argument must be finite");
  }
  if (eta <= kSeriesUpper) return fugacity_series(order_value(order), eta);
  if (eta >= kSommerfeldLower) return sommerfeld(order, eta);
  return quadrature(order, eta);
}

double fd(double order, double eta) { return fd(fd_order(order), eta); }

double fd_derivative(FDOrder order, double eta) {
  const auto lower = lower_order(order);
  if (!lower) {
    throw std::domain_error("derivative of f_" + std::to_string(order_value(order)) +
                            " needs an unsupported order");
  }
  return fd(*lower, eta);
}

}  // namespace fermigas
