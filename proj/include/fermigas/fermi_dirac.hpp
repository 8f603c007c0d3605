#pragma once

#include <array>
#include <optional>

namespace fermigas {

/// Orders of the complete Fermi-Dirac integral used by the trapped-gas model.
/// Half-integer orders come from the phase-space marginals, integer orders
/// from the E^2 density of states and its moments.
enum class FDOrder { Half, One, ThreeHalves, Two, FiveHalves, Three, Four };

inline constexpr std::array<FDOrder, 7> kAllFDOrders = {
    FDOrder::Half,       FDOrder::One,   FDOrder::ThreeHalves, FDOrder::Two,
    FDOrder::FiveHalves, FDOrder::Three, FDOrder::Four};

constexpr double order_value(FDOrder k) {
  switch (k) {
    case FDOrder::Half: return 0.5;
    case FDOrder::One: return 1.0;
    case FDOrder::ThreeHalves: return 1.5;
    case FDOrder::Two: return 2.0;
    case FDOrder::FiveHalves: return 2.5;
    case FDOrder::Three: return 3.0;
    case FDOrder::Four: return 4.0;
  }
  return 0.0;
}

/// Maps a numeric order onto the supported set; throws std::domain_error otherwise.
FDOrder fd_order(double k);

/// The order k-1, if it is itself supported.
std::optional<FDOrder> lower_order(FDOrder k);

/// Complete Fermi-Dirac integral normalised by Gamma(k):
///   f_k(eta) = 1/Gamma(k) * int_0^inf u^(k-1) / (exp(u - eta) + 1) du  = -Li_k(-e^eta).
///
/// Three regimes are stitched together:
///   eta <= -1   alternating fugacity series,
///   eta >= 30   Sommerfeld expansion (terminating for integer k, where the
///               exponentially small reflection term f_k(-eta) is added back),
///   otherwise   adaptive Gauss-Legendre quadrature split at the Fermi edge.
/// Throws std::domain_error for non-finite eta.
double fd(FDOrder order, double eta);
double fd(double order, double eta);

/// d f_k / d eta = f_{k-1}(eta). Throws std::domain_error when k-1 is unsupported.
double fd_derivative(FDOrder order, double eta);

}  // namespace fermigas
