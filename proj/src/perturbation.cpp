#include "fermigas/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fermigas/distributions.hpp"
#include "fermigas/quadrature.hpp"

namespace fermigas {
namespace {

constexpr double kPi = std::numbers::pi;
// int_0^1 s^2 sqrt(1 - s^2) ds
constexpr double kWeightNorm = kPi / 16.0;

std::vector<double> uniform_grid() {
  std::vector<double> grid(kPerturbationGridSize);
  const double h = 1.0 / static_cast<double>(kPerturbationGridSize - 1);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = static_cast<double>(i) * h;
  grid.back() = 1.0;
  return grid;
}

void check_values(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw std::domain_error("perturbation is not finite at grid point " + std::to_string(i));
    }
    if (std::abs(values[i]) > kPerturbationBound) {
      throw std::domain_error("perturbation |dV|/E_F = " + std::to_string(std::abs(values[i])) +
                              " exceeds the smallness bound 0.1 at s = " +
                              std::to_string(static_cast<double>(i) /
                                             static_cast<double>(kPerturbationGridSize - 1)));
    }
  }
}

// s = sin(theta) turns the weight s^2 sqrt(1 - s^2) ds into sin^2 cos^2 dtheta.
double weight_in_theta(double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return s * s * c * c;
}

}  // namespace

PerturbationField::PerturbationField(std::vector<double> values,
                                     std::function<double(double)> closed_form)
    : grid_(uniform_grid()), values_(std::move(values)), closed_form_(std::move(closed_form)) {
  check_values(values_);
}

PerturbationField PerturbationField::from_function(std::function<double(double)> dv) {
  if (!dv) throw std::domain_error("perturbation function is empty");
  const auto grid = uniform_grid();
  std::vector<double> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(), dv);
  return PerturbationField(std::move(values), std::move(dv));
}

PerturbationField PerturbationField::from_table(std::span<const double> s,
                                                std::span<const double> dv) {
  if (s.size() != dv.size() || s.size() < 2) {
    throw std::domain_error("perturbation table needs at least two (s, dV) rows");
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i] > s[i - 1])) throw std::domain_error("perturbation table s must be strictly increasing");
  }
  if (s.front() > 0.0 || s.back() < 1.0) {
    throw std::domain_error("perturbation table must cover s in [0, 1]");
  }
  const auto grid = uniform_grid();
  std::vector<double> values(grid.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    while (j + 2 < s.size() && s[j + 1] < x) ++j;
    const double w = (x - s[j]) / (s[j + 1] - s[j]);
    values[i] = (1.0 - w) * dv[j] + w * dv[j + 1];
  }
  return PerturbationField(std::move(values), nullptr);
}

double PerturbationField::operator()(double s) const {
  if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("perturbation evaluated outside [0, 1]");
  if (closed_form_) return closed_form_(s);
  const double scaled = s * static_cast<double>(kPerturbationGridSize - 1);
  const auto i = std::min(static_cast<std::size_t>(scaled), kPerturbationGridSize - 2);
  const double w = scaled - static_cast<double>(i);
  return (1.0 - w) * values_[i] + w * values_[i + 1];
}

double PerturbationField::weighted_integral() const {
  auto integrand = [this](double theta) {
    return (*this)(std::min(std::sin(theta), 1.0)) * weight_in_theta(theta);
  };
  if (closed_form_) return quad::integrate(integrand, 0.0, 0.5 * kPi, 1e-16);
  // Piecewise linear: one fixed rule per grid cell keeps the kinks on panel edges.
  double total = 0.0;
  double prev_theta = 0.0;
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    const double theta = std::asin(grid_[i]);
    total += quad::gauss_legendre(integrand, prev_theta, theta);
    prev_theta = theta;
  }
  return total;
}

double fermi_energy_shift(const PerturbationField& field) {
  return field.weighted_integral() / kWeightNorm;
}

double density_change(const PerturbationField& field, double delta_e_fermi, double s) {
  if (!(s >= 0.0)) throw std::domain_error("s must be non-negative");
  if (s >= 1.0) return 0.0;
  return 12.0 / (kPi * kPi) * std::sqrt(1.0 - s * s) * (delta_e_fermi - field(s));
}

ResponseResult density_response(const PerturbationField& field) {
  ResponseResult result;
  result.delta_e_fermi = fermi_energy_shift(field);
  result.s = field.grid();
  result.delta_n.resize(result.s.size());
  for (std::size_t i = 0; i < result.s.size(); ++i) {
    result.delta_n[i] = density_change(field, result.delta_e_fermi, result.s[i]);
  }
  return result;
}

ResponseResult mean_field_correction(double u_int) {
  if (!std::isfinite(u_int)) throw std::domain_error("interaction strength must be finite");
  if (std::abs(u_int) * zero_t_density(0.0) > kPerturbationBound) {
    throw std::domain_error("mean-field shift u_int * 8/pi^2 = " +
                            std::to_string(std::abs(u_int) * zero_t_density(0.0)) +
                            " exceeds the smallness bound 0.1");
  }
  return density_response(
      PerturbationField::from_function([u_int](double s) { return u_int * zero_t_density(s); }));
}

}  // namespace fermigas
