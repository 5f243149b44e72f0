#pragma once

#include <array>

#include "ppcorr/correlations.hpp"

namespace ppcorr {

/// Normally ordered mean square intensity <(I_A + I_B)^2> that normalizes
/// the correlator below. Phase independent.
double mean_square_intensity(const PairConfig& pair);

/// Dimensionless correlator g2(phi1, phi2) / <(I_A + I_B)^2> - 1. For every
/// pairing this equals V * cos(phi2 - phi1) with V the interference
/// visibility, which is what makes the CHSH construction work. Throws
/// std::domain_error when the normalization vanishes.
double normalized_g2(const PairConfig& pair, double phi1, double phi2);

/// Detector phase settings (phi1, phi1', phi2, phi2') of a CHSH run.
using ChshAngles = std::array<double, 4>;

/// CHSH evaluation at one set of angles.
struct ChshReport {
  Pairing pairing = Pairing::QQ;
  double visibility = 0.0;
  ChshAngles angles{};
  double chsh_value = 0.0;  ///< |E(1,2) - E(1,2') + E(1',2) + E(1',2')|
  bool violated = false;    ///< chsh_value > 2
};

/// Evaluates the CHSH combination with E = normalized_g2 at the given
/// angles.
ChshReport chsh(const PairConfig& pair, const ChshAngles& angles);

/// CHSH at the optimal angles (0, pi/2, pi/4, 3 pi/4), where the value is
/// exactly 2 sqrt(2) V.
ChshReport chsh_max(const PairConfig& pair);

/// Net photon number of source B at which the optimal CHSH value crosses 2
/// (V = 1/sqrt(2)). Closed form for C, T, PT; bisection for PC. Throws
/// std::invalid_argument for pairings without a crossing (Class never
/// reaches it, QQ always violates).
double bell_threshold(Pairing pairing);

/// Joint detection rates of the two-detector, double-channel arrangement:
/// each detector sits at one output of its local two-port, the two ports
/// differing by a pi phase shift. Efficiencies eta scale the detected
/// rates but cancel in correlation_from_rates.
struct FourChannelRates {
  double plus_plus = 0.0;
  double plus_minus = 0.0;
  double minus_plus = 0.0;
  double minus_minus = 0.0;
  double eta1 = 1.0;
  double eta2 = 1.0;

  std::array<double, 4> detected() const;  ///< rates scaled by eta1 * eta2
};

/// Rates for a mixed or QQ pair at detector phases (phi1, phi2). The single
/// photon on the A side is what makes the +/- channels anticorrelate.
/// Throws std::invalid_argument for the Class pairing (no two-level emitter
/// to route) and for efficiencies outside (0, 1].
FourChannelRates double_channel_rates(const PairConfig& pair, double phi1,
                                      double phi2, double eta1 = 1.0,
                                      double eta2 = 1.0);

/// Normalized correlation (G++ + G-- - G+- - G-+) / (sum of all four) built
/// from detected rates. Detector efficiencies cancel exactly. Throws
/// std::domain_error when the total rate vanishes.
double correlation_from_rates(const FourChannelRates& rates);

}  // namespace ppcorr
