#include "fermigas/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fermigas/fermi_dirac.hpp"
#include "fermigas/quadrature.hpp"
#include "fermigas/thermodynamics.hpp"

namespace fermigas {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCentralDensity = 8.0 / (kPi * kPi);
constexpr double kAbsTol = 1e-13;

void require_non_negative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(name) + " must be finite and non-negative");
  }
}

}  // namespace

double phase_space_occupancy(double s, double q, double t, double m) {
  require_non_negative(s, "s");
  require_non_negative(q, "q");
  require_non_negative(t, "t");
  const double excess = q * q + s * s - m;
  if (t == 0.0) return excess < 0.0 ? 1.0 : (excess == 0.0 ? 0.5 : 0.0);
  const double x = excess / t;
  if (x > 700.0) return 0.0;
  return 1.0 / (std::exp(x) + 1.0);
}

double zero_t_density(double s) {
  require_non_negative(s, "s");
  if (s >= 1.0) return 0.0;
  const double w = 1.0 - s * s;
  return kCentralDensity * w * std::sqrt(w);
}

DensityProfile::DensityProfile(double t) : t_(t), m_(solve_mu(t)) {}

double DensityProfile::operator()(double s) const {
  if (t_ == 0.0) return zero_t_density(s);
  require_non_negative(s, "s");
  const double eta = (m_ - s * s) / t_;
  if (eta < -740.0) return 0.0;
  return 6.0 / std::pow(kPi, 1.5) * std::pow(t_, 1.5) * fd(FDOrder::ThreeHalves, eta);
}

double DensityProfile::cutoff() const { return std::max(1.0, std::sqrt(m_ + 40.0 * t_)); }

template <class Weight>
double DensityProfile::radial_moment(Weight weight) const {
  auto integrand = [&](double s) { return 4.0 * kPi * s * s * weight(s) * (*this)(s); };
  if (t_ == 0.0) {
    // (1 - s^2)^(3/2) near s = 1: substitute s = sin(theta) to smooth the edge.
    auto smooth = [&](double theta) { return integrand(std::sin(theta)) * std::cos(theta); };
    return quad::integrate(smooth, 0.0, 0.5 * kPi, kAbsTol);
  }
  const double upper = cutoff();
  if (m_ <= 0.0) return quad::integrate(integrand, 0.0, upper, kAbsTol);
  const double edge = std::sqrt(m_);
  return quad::integrate(integrand, 0.0, edge, kAbsTol) +
         quad::integrate(integrand, edge, upper, kAbsTol);
}

double DensityProfile::normalization() const {
  return radial_moment([](double) { return 1.0; });
}

double DensityProfile::mean_square_size() const {
  return radial_moment([](double s) { return s * s; });
}

double density(double s, double t) {
  require_non_negative(t, "t");
  if (t == 0.0) return zero_t_density(s);
  return DensityProfile(t)(s);
}

double momentum_density(double q, double t) { return density(q, t); }

double mean_square_size(double t) {
  require_non_negative(t, "t");
  if (t == 0.0) return 0.375;
  return DensityProfile(t).mean_square_size();
}

std::vector<UniversalCurve> profile_curves(std::span<const double> t_list, int n_samples,
                                           std::optional<double> s_max,
                                           ProfileVariable variable) {
  if (t_list.empty()) throw std::domain_error("temperature list is empty");
  if (n_samples < 2) throw std::domain_error("need at least two samples per profile");
  std::vector<DensityProfile> profiles;
  profiles.reserve(t_list.size());
  double reach = 1.0;
  for (double t : t_list) {
    require_non_negative(t, "t");
    profiles.emplace_back(t);
    reach = std::max(reach, profiles.back().cutoff());
  }
  const double upper = s_max.value_or(reach);
  if (!(upper > 0.0) || !std::isfinite(upper)) throw std::domain_error("s_max must be positive");
  const auto grid = linear_grid(0.0, upper, n_samples);
  const char* x_label = variable == ProfileVariable::Space ? "s" : "q";

  std::vector<UniversalCurve> curves;
  curves.reserve(profiles.size());
  for (const auto& profile : profiles) {
    UniversalCurve curve{x_label, "density", {}};
    curve.samples.reserve(grid.size());
    for (double s : grid) curve.samples.push_back({s, profile(s)});
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace fermigas
