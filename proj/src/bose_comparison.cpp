#include "fermigas/bose_comparison.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fermigas {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThomasFermiWarning = 10.0;

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::domain_error(std::string(name) + " must be finite and positive");
  }
}

}  // namespace

BoseParams BoseParams::from_scattering_length(double a_scatt, double n_particles, double lambda) {
  require_positive(a_scatt, "scattering length");
  BoseParams p{4.0 * kPi * a_scatt, n_particles, lambda};
  p.validate();
  return p;
}

double BoseParams::scattering_length() const { return u_bose / (4.0 * kPi); }

void BoseParams::validate() const {
  require_positive(u_bose, "u_bose");
  require_positive(n_particles, "n_particles");
  require_positive(lambda, "lambda");
}

double thomas_fermi_parameter(const BoseParams& p) {
  p.validate();
  return p.u_bose * p.n_particles / p.lambda;
}

std::vector<std::string> diagnostics(const BoseParams& p) {
  std::vector<std::string> out;
  const double tf = thomas_fermi_parameter(p);
  if (tf < kThomasFermiWarning) {
    out.push_back("Thomas-Fermi parameter U N / lambda = " + std::to_string(tf) +
                  " is below 10; kinetic energy is not negligible");
  }
  return out;
}

double bose_radius(const BoseParams& p) {
  p.validate();
  return std::pow(15.0 * p.lambda * p.u_bose * p.n_particles / (4.0 * kPi), 0.2);
}

double bose_profile(double s_b, const BoseParams& p) {
  if (!(s_b >= 0.0)) throw std::domain_error("s_b must be non-negative");
  if (s_b >= 1.0) return 0.0;
  const double r = bose_radius(p);
  return r * r / (2.0 * p.u_bose) * (1.0 - s_b * s_b);
}

double bose_chemical_potential(const BoseParams& p) {
  const double r = bose_radius(p);
  return 0.5 * r * r;
}

double bose_momentum_width(const BoseParams& p) { return 1.0 / bose_radius(p); }

PauliPseudopotential pauli_pseudopotential(const CharacteristicScales& scales) {
  if (!(scales.e_fermi > 0.0 && scales.r_fermi > 0.0 && scales.k_fermi > 0.0) ||
      scales.n_particles < 1) {
    throw std::domain_error("characteristic scales are not valid");
  }
  PauliPseudopotential pp;
  pp.u_eff = scales.e_fermi * std::pow(scales.r_fermi, 3) / static_cast<double>(scales.n_particles);
  pp.a_eff = 1.0 / scales.k_fermi;
  pp.kf_a_eff = scales.k_fermi * pp.a_eff;
  return pp;
}

BoseParams pauli_equivalent_bose(double lambda, double n_particles) {
  const auto sc = trap_unit_scales(lambda, n_particles);
  const double u_eff = sc.e_fermi * std::pow(sc.r_fermi, 3) / n_particles;
  BoseParams p{u_eff, n_particles, lambda};
  p.validate();
  return p;
}

}  // namespace fermigas
