#pragma once

#include <vector>

#include "ppcorr/sources.hpp"

namespace ppcorr {

/// Which two sources feed the interferometer. Mixed pairings (C, T, PC, PT)
/// combine one single-photon emitter (source A) with one classical or
/// photon-added field (source B); Class is coherent x coherent, QQ is two
/// single-photon emitters.
enum class Pairing {
  Class,  ///< coherent x coherent, phase averaged
  C,      ///< single photon x coherent
  T,      ///< single photon x thermal
  PC,     ///< single photon x photon-added coherent
  PT,     ///< single photon x photon-added thermal
  QQ,     ///< single photon x single photon
};

/// Two statistically independent sources plus the pairing tag. The tag is
/// redundant with the kinds but keeps dispatch explicit; operations reject
/// configs whose tag and kinds disagree.
struct PairConfig {
  SourceModel source_a;
  SourceModel source_b;
  Pairing pairing = Pairing::QQ;
};

PairConfig make_mixed(SourceKind kind_b, double nbar);
PairConfig make_classical(double nbar_a, double nbar_b);
PairConfig make_two_emitters();

/// Builds the pairing's canonical config from the seed nbar of source B
/// (both modes for Class; ignored for QQ).
PairConfig pair_from_nbar(Pairing pairing, double nbar);

/// Same, parameterized by the net emitted photon number of source B.
PairConfig pair_from_net(Pairing pairing, double net);

/// Throws std::invalid_argument if the pairing tag contradicts the kinds.
void validate(const PairConfig& pair);

/// First and second normally ordered intensity moments of the two sources.
struct PairMoments {
  double mean_a = 0.0;    ///< <I_A>
  double mean_b = 0.0;    ///< <I_B>
  double square_a = 0.0;  ///< <a†^2 a^2> of source A
  double square_b = 0.0;  ///< <a†^2 a^2> of source B
};

PairMoments pair_moments(const PairConfig& pair);

/// Far-field two-detector arrangement: two sources a distance `separation`
/// apart, detectors at angles xi from the normal, light of `wavelength`.
struct DetectorGeometry {
  double wavelength = 1.0;
  double separation = 1.0;
};

/// Optical phase difference a detector at angle xi accumulates between the
/// two source paths: (2 pi / wavelength) * separation * sin(xi).
double phase_from_geometry(const DetectorGeometry& geometry, double xi);

/// Spatial second-order correlation G2(phi1, phi2). Depends on the detector
/// phases only through dphi = phi2 - phi1 (the phase of source A is gauged
/// away). Normalization: intensities in units of single-emitter counts.
double g2(const PairConfig& pair, double phi1, double phi2);

/// Interference contrast of g2 as dphi sweeps: (max - min) / (max + min).
/// Throws std::domain_error when g2 vanishes identically (Class with both
/// modes empty).
double visibility(const PairConfig& pair);

/// Visibility as a function of the net emitted photon number of source B
/// (both modes for Class). One value per entry of `net`.
std::vector<double> visibility_vs_net(Pairing pairing,
                                      const std::vector<double>& net);

/// Inverts visibility(pair) for the two pairings with a closed-form inverse.
/// pre: pairing is C or T, v in (0, 1].
double nbar_from_visibility(Pairing pairing, double v);

/// Sampled G2 vs dphi with the parameters that produced it.
struct CorrelationCurve {
  Pairing pairing = Pairing::QQ;
  double nbar = 0.0;  ///< seed nbar of source B (or of both Class modes)
  double net = 0.0;   ///< net emitted photon number of source B
  std::vector<double> dphi;
  std::vector<double> g2;
};

/// Samples g2 over dphi in [0, 2 pi] at `count` evenly spaced points
/// (endpoints included). pre: count >= 2.
CorrelationCurve sample_curve(const PairConfig& pair, int count);

const char* to_string(Pairing pairing);

/// Parses the pairing labels Class, C, T, PC, PT, QQ (case sensitive).
Pairing pairing_from_string(const std::string& label);

}  // namespace ppcorr
