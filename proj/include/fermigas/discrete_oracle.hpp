#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fermigas {

/// Largest number of single-particle states build_spectrum will enumerate.
inline constexpr std::uint64_t kMaxSpectrumStates = 20'000'000;

/// One energy of the anisotropic oscillator n_x + n_y + lambda n_z, in units
/// of hbar omega_r with the zero-point energy removed.
struct Level {
  double energy = 0.0;
  std::uint64_t degeneracy = 0;
};

struct DiscreteSpectrum {
  double lambda = 1.0;
  double cutoff = 0.0;
  std::vector<Level> levels;  // sorted by energy, equal energies merged

  std::uint64_t total_states() const;
};

/// All levels with energy <= cutoff. Throws std::domain_error if fewer than
/// min_states states fit below the cutoff or more than kMaxSpectrumStates would.
DiscreteSpectrum build_spectrum(double lambda, double cutoff, std::uint64_t min_states = 0);

/// Chemical potential (hbar omega_r units) at which the Fermi-weighted level
/// sum holds n_particles, at k_B T = t_abs hbar omega_r > 0. Throws
/// std::domain_error if the spectrum stops less than 30 t_abs above mu.
double exact_mu(const DiscreteSpectrum& spectrum, double n_particles, double t_abs);

/// Same, building a spectrum that reaches well past the Fermi energy.
double exact_mu(std::uint64_t n_particles, double lambda, double t_abs);

/// (2 + lambda) / 2, the energy the level convention above subtracts.
double zero_point_energy(double lambda);

/// T = 0 chemical potential for a closed-shell N: the midpoint between the
/// last filled and first empty level. Partial shells throw std::domain_error.
double zero_temperature_mu(std::uint64_t n_particles, double lambda);

/// States in isotropic shells 0..n_max: (n+1)(n+2)(n+3)/6.
std::uint64_t closed_shell_count(std::uint64_t n_max);

/// sigma sqrt(pi) |psi_{2m}(0)|^2 = (2m)! / (4^m (m!)^2), by upward recurrence.
double central_eigenfunction_sq(int m);

/// Exact n(0) sigma^3 for an isotropic trap filled through closed shells.
/// N must be a closed-shell count and lambda must be 1.
double exact_central_density(std::uint64_t n_particles, double lambda = 1.0);

/// Continuum value (8/pi^2) N lambda / R_F^3 = (2 / (sqrt(3) pi^2)) sqrt(N lambda), in sigma^-3.
double semiclassical_central_density(double n_particles, double lambda = 1.0);

/// Local self-consistency of the T = 0 continuum density. Lengths are in
/// sigma_r; radii are s = rho / R_F.
struct ValidityReport {
  std::vector<double> s;
  std::vector<double> margin;      // n sigma^3 / (r / sigma)
  std::vector<double> cell_scale;  // geometric mean of the allowed cell sizes
  std::vector<bool> valid;         // margin > 1
  double shell_thickness = 0.0;    // N^(-1/6)
  double inverse_k_fermi = 0.0;    // (48 N lambda)^(-1/6)
  double crossing_distance = 0.0;  // R_F (1 - s*) where margin(s*) = 1
};

/// margin(s) = A (1 - s^2)^(3/2) / s with A = (8/pi^2) N lambda (48 N lambda)^(-2/3).
double validity_margin(double s, double n_particles, double lambda);

ValidityReport validity_report(double n_particles, double lambda, std::span<const double> radii);

}  // namespace fermigas
