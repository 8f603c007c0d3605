#pragma once

#include <span>

#include "fermigas/curve.hpp"

namespace fermigas {

/// Reduced equation of state of the trapped ideal Fermi gas. Every quantity
/// is in Fermi units, so no reference to N, lambda or omega_r survives:
///   t = k_B T / E_F,  m = mu / E_F,  u = U / (N E_F),  c = C / (N k_B).
/// The heat capacity is taken at fixed N and fixed trap frequencies.
struct ThermoState {
  double t = 0.0;
  double m = 1.0;
  double u = 0.75;
  double c = 0.0;
};

/// Number constraint in reduced form: 6 t^3 f_3(m / t) - 1.
double number_residual(double t, double m);

/// Reduced chemical potential solving 6 t^3 f_3(m/t) = 1; exactly 1 at t = 0.
/// Throws std::domain_error for t < 0 and NumericalError if bracketing fails.
double solve_mu(double t);

/// Low-temperature form 1 - (pi^2/3) t^2.
double sommerfeld_mu(double t);

/// Classical-limit form -t ln(6 t^3); throws std::domain_error for t <= 0.
double classical_mu(double t);

/// u = 18 t^4 f_4(m/t); 3/4 at t = 0.
double internal_energy(double t);

/// c = 12 f_4/f_3 - 9 f_3/f_2 at eta = m/t (implicit differentiation of u at
/// fixed N). Throws std::domain_error for t <= 0.
double heat_capacity(double t);

/// Full state at one temperature; t = 0 is returned symbolically.
ThermoState thermo_state(double t);

struct ThermoCurves {
  UniversalCurve chemical_potential;  // (t, m)
  UniversalCurve heat_capacity;       // (t, c)
};

/// Tabulates m(t) and c(t). The grid must be non-empty, non-negative and
/// strictly increasing (std::domain_error otherwise).
ThermoCurves thermo_curve(std::span<const double> t_grid);

/// Evenly spaced grid of `points` values on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, int points);

}  // namespace fermigas
