#include "fermigas/thermodynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fermigas/errors.hpp"
#include "fermigas/fermi_dirac.hpp"

namespace fermigas {
namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

void require_non_negative(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::domain_error("reduced temperature must be finite and non-negative");
  }
}

void require_positive(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error("reduced temperature must be finite and positive");
  }
}

// 12 f4/f3 - 9 f3/f2. Deep in the degenerate regime the two terms cancel to
// leading order, so there the terminating Sommerfeld polynomials are combined
// by hand: 12 P4 P2 - 9 P3^2 = pi^2 eta^4/12 + pi^4 eta^2/30 + 7 pi^6/180.
double reduced_heat_capacity(double eta) {
  if (eta >= 40.0) {
    const double x2 = 1.0 / (eta * eta);
    const double num = kPi2 / 12.0 + kPi2 * kPi2 * x2 / 30.0 + 7.0 * kPi2 * kPi2 * kPi2 * x2 * x2 / 180.0;
    const double den = (1.0 + kPi2 * x2) / 6.0 * (0.5 + kPi2 * x2 / 6.0);
    return num / den / eta;
  }
  const double f2 = fd(FDOrder::Two, eta);
  const double f3 = fd(FDOrder::Three, eta);
  const double f4 = fd(FDOrder::Four, eta);
  return 12.0 * f4 / f3 - 9.0 * f3 / f2;
}

}  // namespace

double number_residual(double t, double m) {
  return 6.0 * t * t * t * fd(FDOrder::Three, m / t) - 1.0;
}

double solve_mu(double t) {
  require_non_negative(t);
  if (t == 0.0) return 1.0;

  double lo = classical_mu(t) - 5.0 * t;
  double hi = 1.0 + 5.0 * t + 1e-9;
  if (!(number_residual(t, lo) < 0.0) || !(number_residual(t, hi) > 0.0)) {
    throw NumericalError("chemical potential not bracketed at t = " + std::to_string(t));
  }
  // Coarse bisection, then Newton with d/dm [6 t^3 f_3(m/t)] = 6 t^2 f_2(m/t).
  while (hi - lo > 1e-6 * std::max(1.0, std::abs(lo) + std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    (number_residual(t, mid) < 0.0 ? lo : hi) = mid;
  }
  double m = 0.5 * (lo + hi);
  for (int iter = 0; iter < 50; ++iter) {
    const double residual = number_residual(t, m);
    (residual < 0.0 ? lo : hi) = m;
    const double slope = 6.0 * t * t * fd_derivative(FDOrder::Three, m / t);
    double next = m - residual / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const bool converged = std::abs(next - m) <= 1e-15 * std::max(1.0, std::abs(m));
    m = next;
    if (converged) break;
  }
  if (!(std::abs(number_residual(t, m)) <= 1e-12)) {
    throw NumericalError("chemical potential did not converge at t = " + std::to_string(t));
  }
  return m;
}

double sommerfeld_mu(double t) {
  require_non_negative(t);
  return 1.0 - kPi2 / 3.0 * t * t;
}

double classical_mu(double t) {
  require_positive(t);
  return -t * std::log(6.0 * t * t * t);
}

double internal_energy(double t) {
  require_non_negative(t);
  if (t == 0.0) return 0.75;
  const double eta = solve_mu(t) / t;
  return 18.0 * t * t * t * t * fd(FDOrder::Four, eta);
}

double heat_capacity(double t) {
  require_positive(t);
  return reduced_heat_capacity(solve_mu(t) / t);
}

ThermoState thermo_state(double t) {
  require_non_negative(t);
  if (t == 0.0) return {};
  const double m = solve_mu(t);
  const double eta = m / t;
  return {t, m, 18.0 * t * t * t * t * fd(FDOrder::Four, eta), reduced_heat_capacity(eta)};
}

ThermoCurves thermo_curve(std::span<const double> t_grid) {
  if (t_grid.empty()) throw std::domain_error("temperature grid is empty");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    require_non_negative(t_grid[i]);
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) {
      throw std::domain_error("temperature grid must be strictly increasing");
    }
  }
  ThermoCurves curves{{"t", "m", {}}, {"t", "c", {}}};
  curves.chemical_potential.samples.reserve(t_grid.size());
  curves.heat_capacity.samples.reserve(t_grid.size());
  for (double t : t_grid) {
    const ThermoState state = thermo_state(t);
    curves.chemical_potential.samples.push_back({t, state.m});
    curves.heat_capacity.samples.push_back({t, state.c});
  }
  return curves;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 1 || !(hi >= lo)) throw std::domain_error("invalid grid");
  if (points == 1) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  }
  grid.back() = hi;
  return grid;
}

}  // namespace fermigas
