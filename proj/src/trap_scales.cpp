#include "fermigas/trap_scales.hpp"

#include <cmath>
#include <stdexcept>

namespace fermigas {
namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::domain_error(std::string(name) + " must be finite and positive");
  }
}

CharacteristicScales scales_from(double hbar, double mass, double omega_r, double k_boltzmann,
                                 double lambda, double n) {
  CharacteristicScales sc;
  sc.level_spacing = hbar * omega_r;
  sc.e_fermi = sc.level_spacing * std::cbrt(6.0 * lambda * n);
  sc.t_fermi = sc.e_fermi / k_boltzmann;
  sc.sigma_r = std::sqrt(hbar / (mass * omega_r));
  const double size_factor = std::pow(48.0 * n * lambda, 1.0 / 6.0);
  sc.r_fermi = size_factor * sc.sigma_r;
  sc.k_fermi = size_factor / sc.sigma_r;
  sc.lambda = lambda;
  return sc;
}

}  // namespace

void TrapSpec::validate() const {
  require_positive(mass, "mass");
  require_positive(omega_r, "omega_r");
  require_positive(lambda, "lambda");
  if (n_particles < 1) throw std::domain_error("n_particles must be at least 1");
}

CharacteristicScales derive_scales(const TrapSpec& spec) {
  spec.validate();
  auto sc = scales_from(constants::kHbar, spec.mass, spec.omega_r, constants::kBoltzmann,
                        spec.lambda, static_cast<double>(spec.n_particles));
  sc.n_particles = spec.n_particles;
  return sc;
}

CharacteristicScales trap_unit_scales(double lambda, double n_particles) {
  require_positive(lambda, "lambda");
  require_positive(n_particles, "n_particles");
  auto sc = scales_from(1.0, 1.0, 1.0, 1.0, lambda, n_particles);
  sc.n_particles = static_cast<std::uint64_t>(std::llround(n_particles));
  return sc;
}

TrapSpec li6_top_trap() {
  return TrapSpec{constants::kLithium6Mass, 3800.0, std::sqrt(8.0), 100000};
}

std::optional<TrapSpec> preset(std::string_view name) {
  if (name == "li6-top") return li6_top_trap();
  return std::nullopt;
}

double effective_radius(double x, double y, double z, double lambda) {
  return std::sqrt(x * x + y * y + lambda * lambda * z * z);
}

ScaledCoordinates to_scaled(const TrapSpec& spec, const PhysicalCoordinates& physical) {
  if (!(physical.temperature >= 0.0)) throw std::domain_error("temperature must be non-negative");
  if (!(physical.rho >= 0.0) || !(physical.wavenumber >= 0.0)) {
    throw std::domain_error("radius and wavenumber must be non-negative");
  }
  const auto sc = derive_scales(spec);
  return {physical.rho / sc.r_fermi, physical.wavenumber / sc.k_fermi,
          physical.temperature / sc.t_fermi};
}

PhysicalCoordinates from_scaled(const TrapSpec& spec, const ScaledCoordinates& scaled) {
  if (!(scaled.t >= 0.0)) throw std::domain_error("temperature must be non-negative");
  const auto sc = derive_scales(spec);
  return {scaled.s * sc.r_fermi, scaled.q * sc.k_fermi, scaled.t * sc.t_fermi};
}

bool continuum_reliable(double t, const TrapSpec& spec) {
  return t * std::cbrt(6.0 * spec.lambda * static_cast<double>(spec.n_particles)) >= 1.0;
}

}  // namespace fermigas
