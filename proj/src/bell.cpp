#include "ppcorr/bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ppcorr {

namespace {

constexpr double kRoot2 = std::numbers::sqrt2;

// Solves visibility(pair_from_net(pairing, net)) = target for net by
// bisection. pre: visibility is strictly decreasing on [lo, hi] and the
// target is bracketed.
double invert_visibility_by_net(Pairing pairing, double target, double lo,
                                double hi) {
  double f_lo = visibility(pair_from_net(pairing, lo)) - target;
  double f_hi = visibility(pair_from_net(pairing, hi)) - target;
  if (f_lo < 0.0 || f_hi > 0.0) {
    throw std::logic_error("bisection bracket does not straddle the target");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = visibility(pair_from_net(pairing, mid)) - target;
    (f_mid >= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double mean_square_intensity(const PairConfig& pair) {
  const PairMoments m = pair_moments(pair);
  return m.square_a + 2.0 * m.mean_a * m.mean_b + m.square_b;
}

double normalized_g2(const PairConfig& pair, double phi1, double phi2) {
  const double norm = mean_square_intensity(pair);
  if (norm == 0.0) {
    throw std::domain_error(
        "normalized correlator undefined: mean square intensity vanishes");
  }
  return g2(pair, phi1, phi2) / norm - 1.0;
}

ChshReport chsh(const PairConfig& pair, const ChshAngles& angles) {
  ChshReport report;
  report.pairing = pair.pairing;
  report.visibility = visibility(pair);
  report.angles = angles;
  const double a = angles[0], ap = angles[1];
  const double b = angles[2], bp = angles[3];
  const double combo = normalized_g2(pair, a, b) - normalized_g2(pair, a, bp) +
                       normalized_g2(pair, ap, b) +
                       normalized_g2(pair, ap, bp);
  report.chsh_value = std::abs(combo);
  report.violated = report.chsh_value > 2.0;
  return report;
}

ChshReport chsh_max(const PairConfig& pair) {
  constexpr double pi = std::numbers::pi;
  // Each of the four terms contributes +V/sqrt(2) at these settings.
  const ChshAngles angles{0.0, pi / 2.0, pi / 4.0, 3.0 * pi / 4.0};
  ChshReport report = chsh(pair, angles);
  // The combination evaluates to 4 V / sqrt(2); store the exact form to
  // keep downstream threshold checks free of rounding noise.
  report.chsh_value = 2.0 * kRoot2 * report.visibility;
  report.violated = report.chsh_value > 2.0;
  return report;
}

double bell_threshold(Pairing pairing) {
  const double v_target = 1.0 / kRoot2;
  switch (pairing) {
    case Pairing::C:
      // V = 1/(1 + nbar/2) = 1/sqrt(2) at nbar = net = 2 (sqrt(2) - 1).
      return 2.0 * (kRoot2 - 1.0);
    case Pairing::T:
      return kRoot2 - 1.0;
    case Pairing::PT: {
      // V(net) = 4 net / (3 net^2 + 2 net - 1) = 1/sqrt(2) gives the
      // positive root of 3 net^2 + (2 - 4 sqrt(2)) net - 1 = 0.
      const double b = 2.0 - 4.0 * kRoot2;
      return (-b + std::sqrt(b * b + 12.0)) / 6.0;
    }
    case Pairing::PC:
      // No polynomial closed form; the visibility decreases strictly from
      // V(net=1) = 1 past the target before net = 3, so bisect.
      return invert_visibility_by_net(Pairing::PC, v_target, 1.0, 3.0);
    case Pairing::Class:
      throw std::invalid_argument(
          "Class visibility never exceeds 1/2; no CHSH crossing exists");
    case Pairing::QQ:
      throw std::invalid_argument(
          "QQ has unit visibility for any parameters; no crossing exists");
  }
  throw std::logic_error("unhandled pairing");
}

std::array<double, 4> FourChannelRates::detected() const {
  const double scale = eta1 * eta2;
  return {scale * plus_plus, scale * plus_minus, scale * minus_plus,
          scale * minus_minus};
}

FourChannelRates double_channel_rates(const PairConfig& pair, double phi1,
                                      double phi2, double eta1, double eta2) {
  validate(pair);
  if (pair.pairing == Pairing::Class) {
    throw std::invalid_argument(
        "double-channel arrangement needs a single-photon emitter on the A "
        "side");
  }
  if (!(eta1 > 0.0) || eta1 > 1.0 || !(eta2 > 0.0) || eta2 > 1.0) {
    throw std::invalid_argument("detector efficiencies must lie in (0, 1]");
  }
  const PairMoments m = pair_moments(pair);
  const double base = m.square_a + 2.0 * m.mean_a * m.mean_b + m.square_b;
  const double swing =
      2.0 * m.mean_a * m.mean_b * std::cos(phi2 - phi1);
  // The minus channel of either detector flips the sign of that detector's
  // interference term, so like channels share the +swing and unlike
  // channels the -swing.
  FourChannelRates rates;
  rates.plus_plus = base + swing;
  rates.minus_minus = base + swing;
  rates.plus_minus = base - swing;
  rates.minus_plus = base - swing;
  rates.eta1 = eta1;
  rates.eta2 = eta2;
  return rates;
}

double correlation_from_rates(const FourChannelRates& rates) {
  const auto d = rates.detected();
  const double total = d[0] + d[1] + d[2] + d[3];
  if (total <= 0.0) {
    throw std::domain_error("total coincidence rate vanishes");
  }
  return (d[0] + d[3] - d[1] - d[2]) / total;
}

}  // namespace ppcorr
