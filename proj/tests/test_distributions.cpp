#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "fermigas/distributions.hpp"
#include "fermigas/thermodynamics.hpp"
#include "fermigas/trap_scales.hpp"
#include "oracles.hpp"

using namespace fermigas;

namespace {

constexpr double kPi = std::numbers::pi;

double oracle_moment(double t, double power) {
  const DensityProfile profile(t);
  auto integrand = [&](double s) { return 4.0 * kPi * std::pow(s, 2.0 + power) * profile(s); };
  if (t == 0.0) return oracle::integrate_singular(integrand, 0.0, 1.0);
  const double m = profile.chemical_potential();
  const double upper = std::sqrt(std::max(m, 0.0) + 45.0 * t);
  if (m <= 0.0) return oracle::integrate(integrand, 0.0, upper);
  return oracle::integrate(integrand, 0.0, std::sqrt(m)) +
         oracle::integrate(integrand, std::sqrt(m), upper);
}

}  // namespace

TEST_CASE("phase-space occupancy") {
  CHECK(phase_space_occupancy(0.0, 0.0, 0.0, 1.0) == 1.0);
  CHECK(phase_space_occupancy(1.0, 0.5, 0.0, 1.0) == 0.0);
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double s = u(gen);
    const double q = u(gen);
    const double t = 0.01 + u(gen);
    CHECK(phase_space_occupancy(s, q, t, s * s + q * q) == doctest::Approx(0.5).epsilon(1e-15));
  }
  CHECK_THROWS_AS(phase_space_occupancy(-1.0, 0.0, 0.1, 1.0), std::domain_error);
}

TEST_CASE("zero-temperature profile") {
  CHECK(zero_t_density(0.0) == doctest::Approx(8.0 / (kPi * kPi)).epsilon(1e-15));
  CHECK(zero_t_density(1.0) == 0.0);
  CHECK(zero_t_density(1.3) == 0.0);
  CHECK(zero_t_density(0.5) == doctest::Approx(0.52648).epsilon(1e-5));
  for (double s = 0.0; s < 1.5; s += 0.01) CHECK(density(s, 0.0) == zero_t_density(s));
}

TEST_CASE("finite-temperature anchors") {
  // Frozen from arbitrary-precision polylogarithms.
  CHECK(density(0.0, 1.0) == doctest::Approx(0.17319708832836293).epsilon(1e-11));
  CHECK(density(1.0, 0.1) == doctest::Approx(0.019968481602851032).epsilon(1e-11));
  // 3.6% below the Boltzmann Gaussian at the centre for t = 1.
  const double ratio = density(0.0, 1.0) / oracle::boltzmann_density(0.0, 1.0);
  CHECK(ratio == doctest::Approx(1.0 - 0.035581804091442504).epsilon(1e-10));
  CHECK(std::abs(ratio - 1.0) < 0.04);
}

TEST_CASE("position-momentum symmetry") {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    const double x = u(gen);
    const double t = 0.5 * u(gen);
    CHECK(momentum_density(x, t) == density(x, t));
  }
  CHECK(momentum_density(0.0, 0.0) == doctest::Approx(8.0 / (kPi * kPi)).epsilon(1e-15));
  CHECK(momentum_density(1.2, 0.0) == 0.0);
}

TEST_CASE("normalisation") {
  for (double t : {0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 5.0}) {
    INFO("t=" << t);
    CHECK(std::abs(DensityProfile(t).normalization() - 1.0) <= 1e-8);
    CHECK(std::abs(oracle_moment(t, 0.0) - 1.0) <= 1e-8);
  }
}

TEST_CASE("profiles are non-negative and radially non-increasing") {
  for (double t : {0.0, 0.05, 0.3, 1.0, 4.0}) {
    const DensityProfile p(t);
    double prev = p(0.0);
    for (double s = 0.01; s < p.cutoff(); s += 0.01) {
      const double v = p(s);
      CHECK(v >= 0.0);
      CHECK(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("mean-square size") {
  CHECK(mean_square_size(0.0) == 0.375);
  CHECK(DensityProfile(0.0).mean_square_size() == doctest::Approx(0.375).epsilon(1e-12));
  // (32/pi) int_0^1 s^4 (1-s^2)^(3/2) ds = 3/8
  const double beta = 32.0 / kPi *
      oracle::integrate_singular([](double s) { return std::pow(s, 4) * std::pow(1 - s * s, 1.5); }, 0.0, 1.0);
  CHECK(beta == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(mean_square_size(0.25) < mean_square_size(0.5));
  double prev = 0.375;
  for (double t : linear_grid(0.05, 3.0, 30)) {
    const double v = mean_square_size(t);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("virial identity <s^2> = u/2") {
  for (double t : linear_grid(0.0, 5.0, 26)) {
    INFO("t=" << t);
    CHECK(std::abs(mean_square_size(t) - internal_energy(t) / 2.0) <= 1e-7);
  }
  CHECK(oracle_moment(0.7, 2.0) == doctest::Approx(mean_square_size(0.7)).epsilon(1e-10));
}

TEST_CASE("classical limit") {
  double worst = 0.0;
  for (double s = 0.0; s < 12.0; s += 0.02) {
    worst = std::max(worst, std::abs(density(s, 5.0) - oracle::boltzmann_density(s, 5.0)));
  }
  CHECK(worst <= 1e-3);

  // High-temperature slope of <s^2> against the Boltzmann-gas moment.
  auto boltzmann_msd = [](double t) {
    return oracle::integrate([t](double s) { return 4.0 * kPi * std::pow(s, 4) * oracle::boltzmann_density(s, t); },
                             0.0, std::sqrt(60.0 * t));
  };
  const double oracle_slope = (boltzmann_msd(40.0) - boltzmann_msd(20.0)) / 20.0;
  const double slope = (mean_square_size(40.0) - mean_square_size(20.0)) / 20.0;
  CHECK(oracle_slope == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(slope == doctest::Approx(oracle_slope).epsilon(1e-4));
}

TEST_CASE("evaporated atmosphere thickness is linear in t") {
  // Distance over which the profile outside the Fermi edge falls from 50% to
  // 5% of its value at s = sqrt(m); scaled by t this tends to a constant.
  auto width = [](double t) {
    const DensityProfile p(t);
    const double edge = std::sqrt(p.chemical_potential());
    const double ref = p(edge);
    auto crossing = [&](double frac) {
      return oracle::bisect([&](double s) { return p(s) - frac * ref; }, edge, edge + 1.0);
    };
    return crossing(0.05) - crossing(0.5);
  };
  const double w1 = width(0.04) / 0.04;
  const double w2 = width(0.02) / 0.02;
  const double w3 = width(0.01) / 0.01;
  CHECK(w2 == doctest::Approx(w1).epsilon(0.05));
  CHECK(w3 == doctest::Approx(w2).epsilon(0.03));
}

TEST_CASE("iso-density contours have aspect ratio 1/lambda") {
  const double lambda = std::sqrt(8.0);
  for (double t : {0.0, 0.5}) {
    const DensityProfile p(t);
    for (double r = 0.1; r < 1.0; r += 0.1) {
      const double radial = p(effective_radius(r, 0.0, 0.0, lambda));
      const double axial = p(effective_radius(0.0, 0.0, r / lambda, lambda));
      CHECK(radial == doctest::Approx(axial).epsilon(1e-14));
    }
  }
}

TEST_CASE("profile curves") {
  const std::vector<double> temps{0.0, 0.25, 0.5, 0.75, 1.0};
  const auto curves = profile_curves(temps, 300);
  REQUIRE(curves.size() == 5);
  for (std::size_t i = 1; i < curves.size(); ++i) {
    CHECK(curves[i].samples[0][1] < curves[i - 1].samples[0][1]);
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const double s_max = curves[i].samples.back()[0];
    const DensityProfile p(temps[i]);
    const double covered = oracle::integrate([&](double s) { return 4 * kPi * s * s * p(s); }, 0.0,
                                             std::min(s_max, 1.0)) +
        (s_max > 1.0 ? oracle::integrate([&](double s) { return 4 * kPi * s * s * p(s); }, 1.0, s_max) : 0.0);
    CHECK(covered >= 0.999);
  }

  const std::vector<double> zero{0.0};
  const auto exact = profile_curves(zero, 101, 1.5, ProfileVariable::Momentum);
  CHECK(exact[0].x_label == "q");
  for (const auto& [s, v] : exact[0].samples) CHECK(v == zero_t_density(s));

  // Composite Simpson over a fine sampled curve.
  const auto fine = profile_curves(temps, 4001);
  for (const auto& curve : fine) {
    const auto& pts = curve.samples;
    const double h = pts[1][0] - pts[0][0];
    double sum = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double w = (i == 0 || i + 1 == pts.size()) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      sum += w * 4.0 * kPi * pts[i][0] * pts[i][0] * pts[i][1];
    }
    CHECK(std::abs(sum * h / 3.0 - 1.0) <= 1e-6);
  }

  CHECK_THROWS_AS(profile_curves(std::vector<double>{}, 10), std::domain_error);
}
