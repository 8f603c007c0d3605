#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "fermigas/fermi_dirac.hpp"
#include "fermigas/thermodynamics.hpp"
#include "oracles.hpp"

using namespace fermigas;

namespace {
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
}

TEST_CASE("zero temperature is symbolic") {
  CHECK(solve_mu(0.0) == 1.0);
  CHECK(internal_energy(0.0) == 0.75);
  const auto s = thermo_state(0.0);
  CHECK(s.m == 1.0);
  CHECK(s.u == 0.75);
  CHECK(s.c == 0.0);
}

TEST_CASE("chemical potential matches frozen high-precision values") {
  // Frozen from an arbitrary-precision polylogarithm root solve.
  CHECK(solve_mu(0.1) == doctest::Approx(0.96711344725528197).epsilon(1e-12));
  CHECK(solve_mu(0.5) == doctest::Approx(0.21801306408779564).epsilon(1e-11));
  CHECK(solve_mu(0.6) == doctest::Approx(-0.10177543162843743).epsilon(1e-11));
  CHECK(solve_mu(2.0) == doctest::Approx(-7.7372054287300583).epsilon(1e-12));
  CHECK(solve_mu(0.1) == doctest::Approx(1.0 - kPi2 / 300.0).epsilon(2e-5));
  CHECK(solve_mu(2.0) == doctest::Approx(-2.0 * std::log(48.0)).epsilon(1e-3));
}

TEST_CASE("chemical potential agrees with a bisection oracle on Boost quadrature") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> dist(0.02, 3.0);
  for (int i = 0; i < 20; ++i) {
    const double t = dist(gen);
    INFO("t=" << t);
    CHECK(solve_mu(t) == doctest::Approx(oracle::chemical_potential(t)).epsilon(1e-9));
  }
}

TEST_CASE("constraint residual at solved points") {
  for (double t : {1e-4, 1e-3, 0.01, 0.1, 0.3, 0.7, 1.0, 3.0, 10.0, 100.0, 1000.0}) {
    const double m = solve_mu(t);
    INFO("t=" << t);
    CHECK(std::abs(number_residual(t, m)) <= 1e-12);
  }
  CHECK_THROWS_AS(solve_mu(-0.1), std::domain_error);
}

TEST_CASE("limiting forms") {
  CHECK(sommerfeld_mu(0.0) == 1.0);
  CHECK(sommerfeld_mu(0.3) == doctest::Approx(1.0 - kPi2 * 0.03).epsilon(1e-15));
  CHECK(sommerfeld_mu(0.3) == doctest::Approx(0.70391).epsilon(1e-4));
  CHECK(classical_mu(1.0) == doctest::Approx(-std::log(6.0)).epsilon(1e-15));
  CHECK(std::abs(classical_mu(std::pow(6.0, -1.0 / 3.0))) < 1e-15);
  CHECK_THROWS_AS(classical_mu(0.0), std::domain_error);
}

TEST_CASE("agreement with the limiting forms in their regimes") {
  // The deviation at the ends of the nominal windows is larger than 0.02:
  // 0.0405 at t = 0.5 for the Sommerfeld form, 0.0538 at t = 0.6 for the
  // classical form (oracle values). The forms are within 0.02 on [0, 0.4]
  // and on [1.1, 2].
  CHECK(solve_mu(0.5) - sommerfeld_mu(0.5) == doctest::Approx(0.040480097511908859).epsilon(1e-9));
  CHECK(solve_mu(0.6) - classical_mu(0.6) == doctest::Approx(0.053794127129612252).epsilon(1e-9));
  for (double t : linear_grid(0.0, 0.4, 81)) {
    CHECK(std::abs(solve_mu(t) - sommerfeld_mu(t)) <= 0.02);
  }
  for (double t : linear_grid(1.1, 2.0, 91)) {
    CHECK(std::abs(solve_mu(t) - classical_mu(t)) <= 0.02);
  }
}

TEST_CASE("third-order Sommerfeld term vanishes") {
  for (double t : {0.2, 0.1, 0.05}) {
    const double d1 = solve_mu(t) - sommerfeld_mu(t);
    const double d2 = solve_mu(t / 2) - sommerfeld_mu(t / 2);
    INFO("t=" << t);
    CHECK(std::abs(d2) <= std::abs(d1) / 8.0);
  }
}

TEST_CASE("internal energy") {
  CHECK(internal_energy(10.0) == doctest::Approx(30.0).epsilon(1e-3));
  const double integral = oracle::integrate([](double t) { return t > 0 ? heat_capacity(t) : 0.0; },
                                            0.0, 0.05, 1e-12);
  CHECK(internal_energy(0.05) == doctest::Approx(0.75 + integral).epsilon(1e-10));
  double prev = internal_energy(0.0);
  for (double t : linear_grid(0.01, 3.0, 60)) {
    const double u = internal_energy(t);
    CHECK(u > prev);
    prev = u;
  }
  CHECK_THROWS_AS(internal_energy(-1.0), std::domain_error);
}

TEST_CASE("heat capacity") {
  CHECK(heat_capacity(0.01) == doctest::Approx(kPi2 * 0.01).epsilon(1e-3));
  CHECK(heat_capacity(50.0) == doctest::Approx(3.0).epsilon(1e-3));
  const double h = 1e-4;
  const double fdiff = (internal_energy(0.5 + h) - internal_energy(0.5 - h)) / (2.0 * h);
  CHECK(std::abs(heat_capacity(0.5) - fdiff) <= 1e-6);
  CHECK_THROWS_AS(heat_capacity(0.0), std::domain_error);
  for (double t : {1e-4, 1e-6, 1e-10, 1e-30}) CHECK(heat_capacity(t) == doctest::Approx(kPi2 * t).epsilon(1e-6));
  // eta = m/t crosses 40 near t = 0.0247; both sides must join smoothly.
  for (double t : {0.0240, 0.0245, 0.0247, 0.0248, 0.0250, 0.0260}) {
    const double d = (internal_energy(t + h) - internal_energy(t - h)) / (2.0 * h);
    INFO("t=" << t);
    CHECK(std::abs(heat_capacity(t) - d) <= 1e-7);
  }

  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> dist(0.005, 4.0);
  for (int i = 0; i < 25; ++i) {
    const double t = dist(gen);
    const double d = (internal_energy(t + h) - internal_energy(t - h)) / (2.0 * h);
    INFO("t=" << t);
    CHECK(std::abs(heat_capacity(t) - d) <= 1e-6);
  }
}

TEST_CASE("thermodynamic consistency u(t) = 3/4 + int c") {
  for (double t : {0.1, 0.5, 1.0, 2.5, 5.0}) {
    const double integral = oracle::integrate(
        [](double x) { return x > 0 ? heat_capacity(x) : 0.0; }, 0.0, t, 1e-12);
    INFO("t=" << t);
    CHECK(std::abs(internal_energy(t) - 0.75 - integral) <= 1e-6);
  }
}

TEST_CASE("thermo_curve") {
  const std::vector<double> zero{0.0};
  const auto c0 = thermo_curve(zero);
  REQUIRE(c0.chemical_potential.samples.size() == 1);
  CHECK(c0.chemical_potential.samples[0][1] == 1.0);
  CHECK(c0.heat_capacity.samples[0][1] == 0.0);

  const std::vector<double> four{0.25, 0.5, 0.75, 1.0};
  const auto c4 = thermo_curve(four);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(c4.chemical_potential.samples[i][1] < c4.chemical_potential.samples[i - 1][1]);
  }

  const auto grid = linear_grid(0.001, 2.0, 1000);
  const auto big = thermo_curve(grid);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    CHECK(big.chemical_potential.samples[i][1] < big.chemical_potential.samples[i - 1][1]);
    CHECK(big.heat_capacity.samples[i][1] >= big.heat_capacity.samples[i - 1][1]);
    CHECK(big.heat_capacity.samples[i][1] > 0.0);
  }

  CHECK_THROWS_AS(thermo_curve(std::vector<double>{}), std::domain_error);
  CHECK_THROWS_AS(thermo_curve(std::vector<double>{0.5, 0.5}), std::domain_error);
  CHECK_THROWS_AS(thermo_curve(std::vector<double>{-0.1, 0.5}), std::domain_error);
}
