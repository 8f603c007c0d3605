#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fermigas/curve.hpp"

namespace fermigas {

/// Fermi factor at scaled phase-space energy q^2 + s^2:
/// 1 / (exp((q^2 + s^2 - m)/t) + 1), and the step Theta(m - q^2 - s^2) at t = 0.
double phase_space_occupancy(double s, double q, double t, double m);

/// T = 0 scaled density n R_F^3 / (N lambda) = (8/pi^2)(1 - s^2)^(3/2), zero for s > 1.
double zero_t_density(double s);

/// Universal scaled profile at fixed reduced temperature. Constructing it
/// solves for the chemical potential once; evaluation is then cheap.
///   value(s) = (6/pi^(3/2)) t^(3/2) f_{3/2}((m - s^2)/t)
/// The same function describes the momentum marginal K_F^3 n(k)/N vs |k|/K_F.
class DensityProfile {
 public:
  explicit DensityProfile(double t);

  double temperature() const { return t_; }
  double chemical_potential() const { return m_; }

  double operator()(double s) const;

  /// Beyond this radius the occupancy is below e^-40.
  double cutoff() const;

  /// int_0^inf value(s) 4 pi s^2 ds
  double normalization() const;

  /// <rho^2>/R_F^2 = int_0^inf s^2 value(s) 4 pi s^2 ds
  double mean_square_size() const;

 private:
  template <class Weight>
  double radial_moment(Weight weight) const;

  double t_;
  double m_;
};

/// Scaled spatial density at (s, t); t = 0 delegates to zero_t_density.
double density(double s, double t);

/// Scaled momentum density at (q, t). Same function as density().
double momentum_density(double q, double t);

/// <rho^2>/R_F^2; 3/8 at t = 0, u(t)/2 in general by the virial theorem.
double mean_square_size(double t);

enum class ProfileVariable { Space, Momentum };

/// One sampled curve per temperature on a common grid [0, s_max] with
/// n_samples points. Without an explicit s_max the grid extends to the
/// largest cutoff() among the temperatures, covering the norm to better than 1e-3.
std::vector<UniversalCurve> profile_curves(std::span<const double> t_list, int n_samples,
                                           std::optional<double> s_max = std::nullopt,
                                           ProfileVariable variable = ProfileVariable::Space);

}  // namespace fermigas
