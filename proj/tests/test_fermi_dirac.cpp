#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fermigas/fermi_dirac.hpp"
#include "oracles.hpp"

using namespace fermigas;

TEST_CASE("values at eta = 0 match the alternating series") {
  CHECK(fd(FDOrder::One, 0.0) == doctest::Approx(oracle::alternating_zeta(1.0)).epsilon(1e-10));
  CHECK(fd(FDOrder::Two, 0.0) == doctest::Approx(oracle::alternating_zeta(2.0)).epsilon(1e-10));
  CHECK(fd(FDOrder::Three, 0.0) == doctest::Approx(oracle::alternating_zeta(3.0)).epsilon(1e-10));
  CHECK(fd(FDOrder::One, 0.0) == doctest::Approx(std::numbers::ln2).epsilon(1e-12));
  CHECK(fd(FDOrder::Three, 0.0) == doctest::Approx(0.9015426773696957).epsilon(1e-12));
  CHECK(fd_derivative(FDOrder::Three, 0.0) ==
        doctest::Approx(std::numbers::pi * std::numbers::pi / 12.0).epsilon(1e-12));
}

TEST_CASE("Boltzmann and degenerate anchors") {
  CHECK(fd(FDOrder::Two, -20.0) == doctest::Approx(std::exp(-20.0)).epsilon(1e-8));
  CHECK(fd_derivative(FDOrder::Two, -30.0) == doctest::Approx(std::exp(-30.0)).epsilon(1e-12));
  // Quadrature oracle value; the Sommerfeld leading form gives 183.12.
  const double expected = oracle::fermi_dirac_integral(3.0, 10.0);
  CHECK(expected == doctest::Approx(183.11605273482105).epsilon(1e-10));
  CHECK(fd(FDOrder::Three, 10.0) == doctest::Approx(expected).epsilon(1e-10));
  const double sommerfeld_leading = 1000.0 / 6.0 * (1.0 + std::numbers::pi * std::numbers::pi / 100.0);
  CHECK(fd(FDOrder::Three, 10.0) == doctest::Approx(sommerfeld_leading).epsilon(1e-4));
}

TEST_CASE("unsupported orders and arguments are domain errors") {
  CHECK_THROWS_AS(fd(0.75, 0.0), std::domain_error);
  CHECK_THROWS_AS(fd(5.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(fd(FDOrder::Two, std::nan("")), std::domain_error);
  CHECK_THROWS_AS(fd(FDOrder::Two, INFINITY), std::domain_error);
  CHECK_THROWS_AS(fd_derivative(FDOrder::One, 0.0), std::domain_error);
  CHECK_THROWS_AS(fd_derivative(FDOrder::Half, 0.0), std::domain_error);
  CHECK(fd_order(2.5) == FDOrder::FiveHalves);
}

TEST_CASE("central difference reproduces the lower order") {
  const double h = 1e-4;
  const double fdiff = (fd(FDOrder::Three, 1.0 + h) - fd(FDOrder::Three, 1.0 - h)) / (2.0 * h);
  CHECK(std::abs(fdiff - fd(FDOrder::Two, 1.0)) < 1e-7);

  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> eta_dist(-10.0, 50.0);
  for (FDOrder k : kAllFDOrders) {
    const auto lower = lower_order(k);
    if (!lower) continue;
    for (int i = 0; i < 60; ++i) {
      const double eta = eta_dist(gen);
      const double diff = (fd(k, eta + h) - fd(k, eta - h)) / (2.0 * h);
      INFO("k=" << order_value(k) << " eta=" << eta);
      CHECK(std::abs(diff - fd(*lower, eta)) <= 1e-6);
    }
  }
}

TEST_CASE("derivative relation holds across regime boundaries") {
  const double h = 1e-4;
  for (FDOrder k : {FDOrder::ThreeHalves, FDOrder::Two, FDOrder::FiveHalves, FDOrder::Three,
                    FDOrder::Four}) {
    for (double eta : {-1.0, -1.00005, 30.0, 29.99995}) {
      const double diff = (fd(k, eta + h) - fd(k, eta - h)) / (2.0 * h);
      INFO("k=" << order_value(k) << " eta=" << eta);
      CHECK(std::abs(diff - fd_derivative(k, eta)) <= 1e-6);
    }
  }
}

TEST_CASE("monotone and positive in eta") {
  for (FDOrder k : kAllFDOrders) {
    double prev = 0.0;
    for (double eta = -40.0; eta <= 120.0; eta += 0.37) {
      const double value = fd(k, eta);
      CHECK(value > prev);
      prev = value;
    }
  }
}

TEST_CASE("Boltzmann limit below eta = -15") {
  for (FDOrder k : kAllFDOrders) {
    for (double eta = -60.0; eta <= -15.0; eta += 1.5) {
      CHECK(std::abs(fd(k, eta) / std::exp(eta) - 1.0) <= 1e-6);
    }
  }
}

TEST_CASE("Sommerfeld limit for integer orders") {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  for (FDOrder k : {FDOrder::One, FDOrder::Two, FDOrder::Three, FDOrder::Four}) {
    const double kv = order_value(k);
    for (double eta = 40.0; eta <= 400.0; eta += 17.0) {
      const double lhs = fd(k, eta) * std::tgamma(kv + 1.0) / std::pow(eta, kv);
      const double rhs = 1.0 + kv * (kv - 1.0) * pi2 / (6.0 * eta * eta);
      CHECK(std::abs(lhs - rhs) <= 1e-4);
    }
  }
}

TEST_CASE("agrees with direct quadrature of the defining integral") {
  std::mt19937_64 gen(20240611);
  std::uniform_real_distribution<double> eta_dist(-30.0, 100.0);
  for (FDOrder k : kAllFDOrders) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double eta = eta_dist(gen);
      const double ref = oracle::fermi_dirac_integral(order_value(k), eta);
      worst = std::max(worst, std::abs(fd(k, eta) / ref - 1.0));
    }
    INFO("k=" << order_value(k));
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("relative accuracy near 1e-10 at regime edges") {
  for (FDOrder k : kAllFDOrders) {
    for (double eta : {-1.0, -0.999, 0.0, 5.0, 29.9, 30.0, 30.1, 70.0}) {
      const double ref = oracle::fermi_dirac_integral(order_value(k), eta);
      INFO("k=" << order_value(k) << " eta=" << eta);
      CHECK(std::abs(fd(k, eta) / ref - 1.0) <= 1e-10);
    }
  }
}
