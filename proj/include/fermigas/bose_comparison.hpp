#pragma once

#include <string>
#include <vector>

#include "fermigas/trap_scales.hpp"

namespace fermigas {

/// Repulsive Bose gas in the same trap. Everything is in trap units
/// (hbar = M = omega_r = 1): lengths in sigma_r, energies in hbar omega_r.
struct BoseParams {
  double u_bose = 0.0;  // U = 4 pi hbar^2 a / M
  double n_particles = 0.0;
  double lambda = 1.0;

  /// U from an s-wave scattering length given in units of sigma_r.
  static BoseParams from_scattering_length(double a_scatt, double n_particles, double lambda);

  double scattering_length() const;

  /// Throws std::domain_error unless every field is finite and positive.
  void validate() const;
};

/// U N / lambda, the Thomas-Fermi parameter. The profile below is only
/// meaningful when this is large.
double thomas_fermi_parameter(const BoseParams& p);

/// Human-readable warnings, empty when the parameters are comfortably Thomas-Fermi.
std::vector<std::string> diagnostics(const BoseParams& p);

/// R_B = (15 lambda U N / 4 pi)^(1/5)
double bose_radius(const BoseParams& p);

/// n_B = (R_B^2 / 2U)(1 - s_b^2) for s_b = rho / R_B <= 1, zero outside.
double bose_profile(double s_b, const BoseParams& p);

/// mu_B = R_B^2 / 2
double bose_chemical_potential(const BoseParams& p);

/// Momentum width of the condensate, K_B ~ 1 / R_B.
double bose_momentum_width(const BoseParams& p);

/// Heuristic repulsion that makes a Bose cloud roughly as large as the
/// Fermi one. Order of magnitude only. Units follow the scales passed in.
struct PauliPseudopotential {
  double u_eff = 0.0;     // E_F R_F^3 / N
  double a_eff = 0.0;     // 1 / K_F
  double kf_a_eff = 0.0;  // always 1: the equivalent Bose gas is not dilute
};

PauliPseudopotential pauli_pseudopotential(const CharacteristicScales& scales);

/// Bose parameters with U = u_eff for the same trap, in trap units.
BoseParams pauli_equivalent_bose(double lambda, double n_particles);

}  // namespace fermigas
