#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace fermigas {

namespace constants {
// CODATA 2018, 10 significant digits.
inline constexpr double kHbar = 1.054571817e-34;             // J s
inline constexpr double kBoltzmann = 1.380649e-23;           // J / K
inline constexpr double kAtomicMassUnit = 1.660539067e-27;   // kg
inline constexpr double kLithium6Mass = 6.015122887 * kAtomicMassUnit;
}  // namespace constants

/// Physical trap and gas: mass in kg, radial angular frequency in rad/s,
/// anisotropy lambda = omega_z / omega_r, and particle number.
struct TrapSpec {
  double mass = 0.0;
  double omega_r = 0.0;
  double lambda = 1.0;
  std::uint64_t n_particles = 1;

  /// Throws std::domain_error unless every field is finite and positive.
  void validate() const;
};

/// Scales that make the universal curves dimensionless. Level spacing is
/// hbar * omega_r; energies are measured with the zero-point energy removed.
struct CharacteristicScales {
  double e_fermi = 0.0;        // J
  double t_fermi = 0.0;        // K
  double r_fermi = 0.0;        // m
  double k_fermi = 0.0;        // 1/m
  double sigma_r = 0.0;        // m
  double level_spacing = 0.0;  // J
  double lambda = 1.0;
  std::uint64_t n_particles = 1;
};

CharacteristicScales derive_scales(const TrapSpec& spec);

/// Same scales in trap units: hbar = M = omega_r = k_B = 1, so energies are
/// in hbar*omega_r and lengths in sigma_r.
CharacteristicScales trap_unit_scales(double lambda, double n_particles);

/// The 6Li TOP-trap example: omega_r = 3800 s^-1, lambda = sqrt(8), N = 1e5.
TrapSpec li6_top_trap();

/// Named presets; currently only "li6-top".
std::optional<TrapSpec> preset(std::string_view name);

/// (x^2 + y^2 + lambda^2 z^2)^(1/2): trap profiles depend on position only through this.
double effective_radius(double x, double y, double z, double lambda);

struct ScaledCoordinates {
  double s = 0.0;  // rho / R_F
  double q = 0.0;  // |k| / K_F
  double t = 0.0;  // k_B T / E_F
};

struct PhysicalCoordinates {
  double rho = 0.0;          // m
  double wavenumber = 0.0;   // 1/m
  double temperature = 0.0;  // K
};

ScaledCoordinates to_scaled(const TrapSpec& spec, const PhysicalCoordinates& physical);
PhysicalCoordinates from_scaled(const TrapSpec& spec, const ScaledCoordinates& scaled);

/// k_B T >= hbar omega_r, i.e. t (6 lambda N)^(1/3) >= 1. Below this the
/// continuum density of states is not a good description of the spectrum.
bool continuum_reliable(double t, const TrapSpec& spec);

}  // namespace fermigas
