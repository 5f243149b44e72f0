#include "ppcorr/nonclassicality.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ppcorr {

namespace {

constexpr double kInfinityGuard = 1e-12;  // |den| <= guard * |num| flags inf
constexpr double kBoundaryTol = 1e-9;     // relative determinant tolerance

// Classifies num/den per the infinity rule shared by schwarz_ratio and
// schwarz_max. pre: num >= 0, den >= 0 (both are squares).
SchwarzValue classify_ratio(double num, double den) {
  if (num == 0.0 && den == 0.0) {
    throw std::domain_error(
        "Cauchy-Schwarz ratio undefined: numerator and denominator both "
        "vanish");
  }
  if (num != 0.0 && den <= kInfinityGuard * num) return {0.0, true};
  return {num / den, false};
}

}  // namespace

VarianceCoefficients variance_coefficients(const PairConfig& pair) {
  validate(pair);
  const double n = pair.source_b.nbar;
  switch (pair.pairing) {
    case Pairing::Class: {
      const double na = pair.source_a.nbar;
      return {0.0, 2.0 * na * n};
    }
    case Pairing::C:
      return {-1.0, 2.0 * n};
    case Pairing::T:
      return {n * n - 1.0, 2.0 * n};
    case Pairing::PC: {
      const double d = (n + 1.0) * (n + 1.0);
      return {-(3.0 * n * n + 4.0 * n + 2.0) / d,
              (2.0 * n * n * n + 8.0 * n * n + 8.0 * n + 2.0) / d};
    }
    case Pairing::PT:
      return {2.0 * n * n - 2.0, 2.0 * (2.0 * n + 1.0)};
    case Pairing::QQ:
      return {-2.0, 2.0};
  }
  throw std::logic_error("unhandled pairing");
}

double variance_corr(const PairConfig& pair, double phi_k, double phi_l) {
  const VarianceCoefficients v = variance_coefficients(pair);
  return v.offset + v.cos_coeff * std::cos(phi_l - phi_k);
}

double cs_determinant(const PairConfig& pair, double phi1, double phi2) {
  const VarianceCoefficients v = variance_coefficients(pair);
  const double diag = v.offset + v.cos_coeff;
  const double off = v.offset + v.cos_coeff * std::cos(phi2 - phi1);
  return diag * diag - off * off;
}

SchwarzValue schwarz_ratio(const PairConfig& pair, double phi1, double phi2) {
  const VarianceCoefficients v = variance_coefficients(pair);
  const double diag = v.offset + v.cos_coeff;
  const double off = v.offset + v.cos_coeff * std::cos(phi2 - phi1);
  return classify_ratio(off * off, diag * diag);
}

SchwarzMax schwarz_max(const PairConfig& pair) {
  const VarianceCoefficients v = variance_coefficients(pair);
  const double diag = v.offset + v.cos_coeff;   // var at dphi = 0
  const double anti = v.offset - v.cos_coeff;   // var at dphi = pi
  const double den = diag * diag;
  const double num_pi = anti * anti;
  // The ratio at dphi = 0 is 1 whenever it is defined, so only dphi = pi
  // can beat it.
  if (num_pi != 0.0 && den <= kInfinityGuard * num_pi) {
    return {{0.0, true}, std::numbers::pi};
  }
  if (den == 0.0) {
    throw std::domain_error(
        "Cauchy-Schwarz ratio undefined: covariance vanishes identically");
  }
  const double s_pi = num_pi / den;
  if (s_pi > 1.0) return {{s_pi, false}, std::numbers::pi};
  return {{1.0, false}, 0.0};
}

WitnessReport witness_report(const PairConfig& pair) {
  const VarianceCoefficients v = variance_coefficients(pair);
  WitnessReport report;
  report.pairing = pair.pairing;
  report.nbar = pair.source_b.nbar;
  report.net = pair.pairing == Pairing::QQ
                   ? 1.0
                   : net_photon_number(pair.source_b);
  report.diagonal = v.offset + v.cos_coeff;
  report.off_peak = v.offset - v.cos_coeff;
  // Equal phases saturate the inequality for any state (det(0) = 0), so
  // the anti-phase determinant is the decisive one: it alone can turn
  // negative, and its zero crossing is the violation boundary.
  const double det_pi = report.diagonal * report.diagonal -
                        report.off_peak * report.off_peak;
  report.determinant_min = std::min(0.0, det_pi);
  report.s_max = schwarz_max(pair);
  report.violated = report.determinant_min < 0.0 || report.diagonal < 0.0;
  const double scale = std::max(report.diagonal * report.diagonal,
                                report.off_peak * report.off_peak);
  report.boundary = std::abs(det_pi) <= kBoundaryTol * scale;
  return report;
}

std::string CsThreshold::describe() const {
  const std::string name = to_string(pairing);
  switch (regime) {
    case Regime::Never:
      return name + ": never violated (classical pair)";
    case Regime::Always:
      return name + ": violated unconditionally";
    case Regime::BelowNet:
      return name + ": violated iff net photon number < " +
             std::to_string(net_bound);
    case Regime::AnyFiniteNet:
      return name + ": violated at every finite net photon number";
  }
  return name;
}

CsThreshold cs_violation_threshold(Pairing pairing) {
  switch (pairing) {
    case Pairing::Class:
      return {pairing, CsThreshold::Regime::Never, 0.0};
    case Pairing::QQ:
      return {pairing, CsThreshold::Regime::Always, 0.0};
    case Pairing::T:
      return {pairing, CsThreshold::Regime::BelowNet, 1.0};
    case Pairing::PT:
      return {pairing, CsThreshold::Regime::BelowNet, 3.0};
    case Pairing::C:
    case Pairing::PC:
      return {pairing, CsThreshold::Regime::AnyFiniteNet, 0.0};
  }
  throw std::logic_error("unhandled pairing");
}

NaiveCs naive_normalized_cs(const PairConfig& pair, double phi1, double phi2) {
  const PairMoments m = pair_moments(pair);
  const double mean = m.mean_a + m.mean_b;  // <I(phi)> is flat in phi
  if (mean == 0.0) {
    throw std::domain_error(
        "naive normalization undefined for vanishing mean intensity");
  }
  const double norm = mean * mean;
  const double g_cross = g2(pair, phi1, phi2) / norm;
  const double g_11 = g2(pair, phi1, phi1) / norm;
  const double g_22 = g2(pair, phi2, phi2) / norm;
  return {g_cross * g_cross, g_11 * g_22};
}

}  // namespace ppcorr
