#pragma once

#include <string>

#include "ppcorr/correlations.hpp"

namespace ppcorr {

/// Coefficients of the normally ordered intensity covariance
/// var(phi_k, phi_l) = offset + cos_coeff * cos(phi_l - phi_k).
struct VarianceCoefficients {
  double offset = 0.0;
  double cos_coeff = 0.0;
};

VarianceCoefficients variance_coefficients(const PairConfig& pair);

/// Normally ordered covariance of the intensities at two detector phases:
/// G2(phi_k, phi_l) - <I(phi_k)><I(phi_l)>. Negative values are already
/// nonclassical (no classical field has a negative diagonal).
double variance_corr(const PairConfig& pair, double phi_k, double phi_l);

/// Cauchy-Schwarz determinant var(1,1) * var(2,2) - var(1,2)^2. Classical
/// fields keep it >= 0 for every phase pair.
double cs_determinant(const PairConfig& pair, double phi1, double phi2);

/// Ratio value that may be flagged infinite (vanishing denominator under a
/// nonvanishing numerator).
struct SchwarzValue {
  double value = 0.0;
  bool infinite = false;
};

/// Cauchy-Schwarz ratio S = var(phi1, phi2)^2 / (var(1,1) var(2,2)).
/// S > 1 signals nonclassicality. Flags infinity when the denominator
/// magnitude is <= 1e-12 times the numerator and the numerator is nonzero;
/// throws std::domain_error when numerator and denominator both vanish.
SchwarzValue schwarz_ratio(const PairConfig& pair, double phi1, double phi2);

/// Maximum of the ratio over the phase difference, with the maximizing
/// dphi. Every closed form is affine in cos(dphi), so the extrema sit at
/// dphi = 0 and pi; ties resolve to 0.
struct SchwarzMax {
  SchwarzValue s;
  double dphi_star = 0.0;
};

SchwarzMax schwarz_max(const PairConfig& pair);

/// Full witness evaluation for one pair configuration.
struct WitnessReport {
  Pairing pairing = Pairing::QQ;
  double nbar = 0.0;             ///< seed nbar of source B
  double net = 0.0;              ///< net photon number of source B
  double diagonal = 0.0;         ///< var(phi, phi), phase independent
  double off_peak = 0.0;         ///< var at dphi = pi
  double determinant_min = 0.0;  ///< min over dphi of the CS determinant
  SchwarzMax s_max;
  bool violated = false;  ///< determinant_min < 0 or diagonal < 0
  bool boundary = false;  ///< |determinant_min| within 1e-9 relative
};

WitnessReport witness_report(const PairConfig& pair);

/// Closed-form violation regime of a pairing in terms of the net photon
/// number of source B.
struct CsThreshold {
  enum class Regime {
    Never,         ///< no parameter value violates (Class)
    Always,        ///< violated unconditionally (QQ)
    BelowNet,      ///< violated iff net < net_bound (T, PT)
    AnyFiniteNet,  ///< violated at every finite net (C, PC)
  };
  Pairing pairing = Pairing::QQ;
  Regime regime = Regime::Always;
  double net_bound = 0.0;  ///< meaningful only for BelowNet
  std::string describe() const;
};

CsThreshold cs_violation_threshold(Pairing pairing);

/// Both sides of the naively normalized CS inequality
/// [g2(phi1,phi2)]^2 <= g2(phi1,phi1) g2(phi2,phi2), where g2 divides by
/// the (phase independent) mean intensity product. This form never signals
/// a violation, which is why the variance-based witness above exists.
struct NaiveCs {
  double lhs = 0.0;
  double rhs = 0.0;
};

NaiveCs naive_normalized_cs(const PairConfig& pair, double phi1, double phi2);

}  // namespace ppcorr
