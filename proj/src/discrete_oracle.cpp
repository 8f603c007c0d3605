#include "fermigas/discrete_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fermigas/errors.hpp"

namespace fermigas {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCutoffMargin = 30.0;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::domain_error(std::string(name) + " must be finite and positive");
  }
}

double fermi_factor(double x) {
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

double occupied(const DiscreteSpectrum& spectrum, double mu, double t_abs) {
  CompensatedSum sum;
  for (const auto& level : spectrum.levels) {
    sum.add(static_cast<double>(level.degeneracy) * fermi_factor((level.energy - mu) / t_abs));
  }
  return sum.value();
}

std::uint64_t axial_count(double cutoff, double lambda, std::uint64_t n) {
  return static_cast<std::uint64_t>(std::floor((cutoff - static_cast<double>(n)) / lambda)) + 1;
}

}  // namespace

std::uint64_t DiscreteSpectrum::total_states() const {
  std::uint64_t total = 0;
  for (const auto& level : levels) total += level.degeneracy;
  return total;
}

DiscreteSpectrum build_spectrum(double lambda, double cutoff, std::uint64_t min_states) {
  require_positive(lambda, "lambda");
  if (!std::isfinite(cutoff) || cutoff < 0.0) {
    throw std::domain_error("spectrum cutoff must be finite and non-negative");
  }
  const auto n_top = static_cast<std::uint64_t>(std::floor(cutoff));
  std::uint64_t states = 0;
  for (std::uint64_t n = 0; n <= n_top; ++n) {
    states += (n + 1) * axial_count(cutoff, lambda, n);
    if (states > kMaxSpectrumStates) {
      throw std::domain_error("spectrum below cutoff " + std::to_string(cutoff) +
                              " exceeds the enumeration limit of 2e7 states");
    }
  }
  if (states < min_states) {
    throw std::domain_error("spectrum below cutoff " + std::to_string(cutoff) + " holds " +
                            std::to_string(states) + " states, fewer than the " +
                            std::to_string(min_states) + " required");
  }

  std::vector<Level> raw;
  for (std::uint64_t n = 0; n <= n_top; ++n) {
    const auto nz_count = axial_count(cutoff, lambda, n);
    for (std::uint64_t nz = 0; nz < nz_count; ++nz) {
      raw.push_back({static_cast<double>(n) + lambda * static_cast<double>(nz), n + 1});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Level& a, const Level& b) { return a.energy < b.energy; });

  DiscreteSpectrum spectrum{lambda, cutoff, {}};
  for (const auto& level : raw) {
    auto& out = spectrum.levels;
    if (!out.empty() && level.energy - out.back().energy <= 1e-12 * std::max(1.0, level.energy)) {
      out.back().degeneracy += level.degeneracy;
    } else {
      out.push_back(level);
    }
  }
  return spectrum;
}

double exact_mu(const DiscreteSpectrum& spectrum, double n_particles, double t_abs) {
  require_positive(t_abs, "t_abs");
  require_positive(n_particles, "n_particles");
  if (spectrum.levels.empty()) throw std::domain_error("spectrum is empty");
  auto residual = [&](double mu) { return occupied(spectrum, mu, t_abs) - n_particles; };

  double lo = spectrum.levels.front().energy - 50.0 * t_abs;
  double hi = spectrum.cutoff - kCutoffMargin * t_abs;
  if (!(hi > lo) || residual(hi) < 0.0) {
    throw std::domain_error("spectrum cutoff " + std::to_string(spectrum.cutoff) +
                            " is too low for N = " + std::to_string(n_particles) +
                            " at t_abs = " + std::to_string(t_abs));
  }
  if (residual(lo) > 0.0) throw NumericalError("exact_mu: lower bracket already holds N particles");
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (residual(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double mu = 0.5 * (lo + hi);
  if (std::abs(residual(mu)) > 1e-10 * n_particles) {
    throw NumericalError("exact_mu: particle count not reached to 1e-10 N");
  }
  return mu;
}

double exact_mu(std::uint64_t n_particles, double lambda, double t_abs) {
  require_positive(lambda, "lambda");
  require_positive(t_abs, "t_abs");
  if (n_particles < 1) throw std::domain_error("n_particles must be at least 1");
  const double n = static_cast<double>(n_particles);
  const double cutoff = std::cbrt(6.0 * lambda * n) + 40.0 * t_abs + 2.0;
  return exact_mu(build_spectrum(lambda, cutoff, 2 * n_particles), n, t_abs);
}

double zero_point_energy(double lambda) {
  require_positive(lambda, "lambda");
  return 0.5 * (2.0 + lambda);
}

double zero_temperature_mu(std::uint64_t n_particles, double lambda) {
  require_positive(lambda, "lambda");
  if (n_particles < 1) throw std::domain_error("n_particles must be at least 1");
  double cutoff = std::cbrt(6.0 * lambda * static_cast<double>(n_particles)) + 2.0 + lambda;
  for (;;) {
    const auto spectrum = build_spectrum(lambda, cutoff);
    std::uint64_t filled = 0;
    const auto& levels = spectrum.levels;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
      filled += levels[i].degeneracy;
      if (filled == n_particles) return 0.5 * (levels[i].energy + levels[i + 1].energy);
      if (filled > n_particles) {
        throw std::domain_error("N = " + std::to_string(n_particles) +
                                " leaves the level at energy " + std::to_string(levels[i].energy) +
                                " partially filled; T = 0 needs a closed shell");
      }
    }
    cutoff *= 2.0;
  }
}

std::uint64_t closed_shell_count(std::uint64_t n_max) {
  return (n_max + 1) * (n_max + 2) * (n_max + 3) / 6;
}

double central_eigenfunction_sq(int m) {
  if (m < 0) throw std::domain_error("eigenfunction index must be non-negative");
  double a = 1.0;
  for (int k = 1; k <= m; ++k) a *= (2.0 * k - 1.0) / (2.0 * k);
  return a;
}

double exact_central_density(std::uint64_t n_particles, double lambda) {
  if (lambda != 1.0) throw std::domain_error("exact_central_density supports lambda = 1 only");
  std::uint64_t n_max = 0;
  while (closed_shell_count(n_max) < n_particles) ++n_max;
  if (closed_shell_count(n_max) != n_particles) {
    throw std::domain_error("N = " + std::to_string(n_particles) + " is not a closed-shell count");
  }
  // Only even 1-D indices 2i, 2j, 2k with 2(i + j + k) <= n_max are nonzero at the origin.
  const auto half = static_cast<int>(n_max / 2);
  std::vector<double> a(static_cast<std::size_t>(half) + 1);
  a[0] = 1.0;
  for (int m = 1; m <= half; ++m) a[m] = a[m - 1] * (2.0 * m - 1.0) / (2.0 * m);
  CompensatedSum sum;
  for (int i = 0; i <= half; ++i) {
    for (int j = 0; i + j <= half; ++j) {
      for (int k = 0; i + j + k <= half; ++k) sum.add(a[i] * a[j] * a[k]);
    }
  }
  return sum.value() / std::pow(kPi, 1.5);
}

double semiclassical_central_density(double n_particles, double lambda) {
  require_positive(n_particles, "n_particles");
  require_positive(lambda, "lambda");
  return 2.0 / (std::sqrt(3.0) * kPi * kPi) * std::sqrt(n_particles * lambda);
}

double validity_margin(double s, double n_particles, double lambda) {
  require_positive(n_particles, "n_particles");
  require_positive(lambda, "lambda");
  if (!(s >= 0.0)) throw std::domain_error("s must be non-negative");
  if (s >= 1.0) return 0.0;
  if (s == 0.0) return std::numeric_limits<double>::infinity();
  const double nl = n_particles * lambda;
  const double amplitude = 8.0 / (kPi * kPi) * nl * std::pow(48.0 * nl, -2.0 / 3.0);
  return amplitude * std::pow(1.0 - s * s, 1.5) / s;
}

ValidityReport validity_report(double n_particles, double lambda, std::span<const double> radii) {
  require_positive(n_particles, "n_particles");
  require_positive(lambda, "lambda");
  const double nl = n_particles * lambda;
  const double r_fermi = std::pow(48.0 * nl, 1.0 / 6.0);
  const double inf = std::numeric_limits<double>::infinity();

  ValidityReport report;
  for (double s : radii) {
    if (!(s >= 0.0 && s <= 1.2)) throw std::domain_error("validity radii must lie in [0, 1.2]");
    const double margin = validity_margin(s, n_particles, lambda);
    const double w = std::max(1.0 - s * s, 0.0);
    const double n_sigma3 = 8.0 / (kPi * kPi) * std::pow(w, 1.5) * nl / std::pow(r_fermi, 3);
    double cell = inf;
    if (n_sigma3 <= 0.0) {
      cell = std::numeric_limits<double>::quiet_NaN();
    } else if (s > 0.0) {
      const double ell_min = std::cbrt(1.0 / n_sigma3);
      const double ell_max = 0.5 * std::pow(6.0 * kPi * kPi * n_sigma3, 2.0 / 3.0) / (s * r_fermi);
      cell = std::sqrt(ell_min * ell_max);
    }
    report.s.push_back(s);
    report.margin.push_back(margin);
    report.cell_scale.push_back(cell);
    report.valid.push_back(margin > 1.0);
  }
  report.shell_thickness = std::pow(n_particles, -1.0 / 6.0);
  report.inverse_k_fermi = 1.0 / r_fermi;

  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (validity_margin(mid, n_particles, lambda) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  report.crossing_distance = r_fermi * (1.0 - 0.5 * (lo + hi));
  return report;
}

}  // namespace fermigas
