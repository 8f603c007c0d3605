#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fermigas {

/// Number of uniform grid points on [0, 1] carrying a perturbation field.
inline constexpr std::size_t kPerturbationGridSize = 2048;

/// Largest |dV|/E_F accepted as a perturbation.
inline constexpr double kPerturbationBound = 0.1;

/// Small change of the trap potential as a function of the effective radius,
/// dV(s)/E_F on s in [0, 1]. Stored on a uniform grid with linear
/// interpolation; fields built from a closed form keep it for quadrature.
class PerturbationField {
 public:
  /// Throws std::domain_error if the field is non-finite or exceeds the bound.
  static PerturbationField from_function(std::function<double(double)> dv);

  /// Tabulated (s, dV/E_F) pairs, s strictly increasing and spanning [0, 1].
  /// Resampled onto the internal grid by linear interpolation.
  static PerturbationField from_table(std::span<const double> s, std::span<const double> dv);

  double operator()(double s) const;

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  bool has_closed_form() const { return static_cast<bool>(closed_form_); }

  /// int_0^1 dV(s) s^2 sqrt(1 - s^2) ds, the k_F-weighted integral.
  double weighted_integral() const;

 private:
  PerturbationField(std::vector<double> values, std::function<double(double)> closed_form);

  std::vector<double> grid_;
  std::vector<double> values_;
  std::function<double(double)> closed_form_;
};

/// Linear T = 0 response on the field's grid. delta_n is the scaled change
/// dn R_F^3/(N lambda); delta_e_fermi is dE_F/E_F.
struct ResponseResult {
  double delta_e_fermi = 0.0;
  std::vector<double> s;
  std::vector<double> delta_n;
};

/// dE_F/E_F: the local-Fermi-wavenumber weighted average of dV that keeps N fixed.
double fermi_energy_shift(const PerturbationField& field);

/// (12/pi^2) sqrt(1 - s^2) (dE_F - dV(s)) inside the cloud, zero outside.
double density_change(const PerturbationField& field, double delta_e_fermi, double s);

ResponseResult density_response(const PerturbationField& field);

/// One-shot mean-field shift dV = u_int * zero_t_density(s), with
/// u_int = U N lambda / (E_F R_F^3). Throws std::domain_error when
/// |u_int| * 8/pi^2 exceeds the perturbation bound.
ResponseResult mean_field_correction(double u_int);

}  // namespace fermigas
