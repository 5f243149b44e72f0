#include "ppcorr/correlations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ppcorr {

namespace {

SourceKind kind_b_for(Pairing pairing) {
  switch (pairing) {
    case Pairing::Class: return SourceKind::Coherent;
    case Pairing::C: return SourceKind::Coherent;
    case Pairing::T: return SourceKind::Thermal;
    case Pairing::PC: return SourceKind::Pacs;
    case Pairing::PT: return SourceKind::Pats;
    case Pairing::QQ: return SourceKind::SinglePhoton;
  }
  throw std::logic_error("unhandled pairing");
}

}  // namespace

PairConfig make_mixed(SourceKind kind_b, double nbar) {
  Pairing pairing;
  switch (kind_b) {
    case SourceKind::Coherent: pairing = Pairing::C; break;
    case SourceKind::Thermal: pairing = Pairing::T; break;
    case SourceKind::Pacs: pairing = Pairing::PC; break;
    case SourceKind::Pats: pairing = Pairing::PT; break;
    default:
      throw std::invalid_argument(
          "mixed pairing needs a field source (coherent, thermal, pacs, "
          "pats) on the B side");
  }
  return {make_single_photon(), {kind_b, nbar}, pairing};
}

PairConfig make_classical(double nbar_a, double nbar_b) {
  return {make_coherent(nbar_a), make_coherent(nbar_b), Pairing::Class};
}

PairConfig make_two_emitters() {
  return {make_single_photon(), make_single_photon(), Pairing::QQ};
}

PairConfig pair_from_nbar(Pairing pairing, double nbar) {
  switch (pairing) {
    case Pairing::Class: return make_classical(nbar, nbar);
    case Pairing::QQ: return make_two_emitters();
    default: return make_mixed(kind_b_for(pairing), nbar);
  }
}

PairConfig pair_from_net(Pairing pairing, double net) {
  if (pairing == Pairing::QQ) return make_two_emitters();
  return pair_from_nbar(pairing, nbar_from_net(kind_b_for(pairing), net));
}

void validate(const PairConfig& pair) {
  const bool a_single = pair.source_a.kind == SourceKind::SinglePhoton;
  const SourceKind b = pair.source_b.kind;
  bool ok = false;
  switch (pair.pairing) {
    case Pairing::Class:
      ok = pair.source_a.kind == SourceKind::Coherent &&
           b == SourceKind::Coherent;
      break;
    case Pairing::C: ok = a_single && b == SourceKind::Coherent; break;
    case Pairing::T: ok = a_single && b == SourceKind::Thermal; break;
    case Pairing::PC: ok = a_single && b == SourceKind::Pacs; break;
    case Pairing::PT: ok = a_single && b == SourceKind::Pats; break;
    case Pairing::QQ: ok = a_single && b == SourceKind::SinglePhoton; break;
  }
  if (!ok) {
    throw std::invalid_argument(
        std::string("pairing tag ") + to_string(pair.pairing) +
        " does not match source kinds (" + to_string(pair.source_a.kind) +
        ", " + to_string(pair.source_b.kind) + ")");
  }
}

PairMoments pair_moments(const PairConfig& pair) {
  validate(pair);
  return {moment(pair.source_a, 1), moment(pair.source_b, 1),
          moment(pair.source_a, 2), moment(pair.source_b, 2)};
}

double phase_from_geometry(const DetectorGeometry& geometry, double xi) {
  if (!(geometry.wavelength > 0.0) || !std::isfinite(geometry.wavelength)) {
    throw std::invalid_argument("wavelength must be finite and > 0");
  }
  if (!(geometry.separation >= 0.0) || !std::isfinite(geometry.separation)) {
    throw std::invalid_argument("separation must be finite and >= 0");
  }
  return 2.0 * std::numbers::pi / geometry.wavelength * geometry.separation *
         std::sin(xi);
}

double g2(const PairConfig& pair, double phi1, double phi2) {
  validate(pair);
  const double c = std::cos(phi2 - phi1);
  const double n = pair.source_b.nbar;
  switch (pair.pairing) {
    case Pairing::Class: {
      const double na = pair.source_a.nbar;
      return na * na + n * n + 2.0 * na * n * (1.0 + c);
    }
    case Pairing::C:
      return n * n + 2.0 * n * (1.0 + c);
    case Pairing::T:
      return 2.0 * n * n + 2.0 * n * (1.0 + c);
    case Pairing::PC:
      return n * n + 4.0 * n +
             2.0 * (n * n + 3.0 * n + 1.0) / (1.0 + n) * (1.0 + c);
    case Pairing::PT:
      return (6.0 * n * n * n + 10.0 * n * n + 4.0 * n) / (n + 1.0) +
             2.0 * (2.0 * n + 1.0) * (1.0 + c);
    case Pairing::QQ:
      return 2.0 * (1.0 + c);
  }
  throw std::logic_error("unhandled pairing");
}

double visibility(const PairConfig& pair) {
  validate(pair);
  const double n = pair.source_b.nbar;
  switch (pair.pairing) {
    case Pairing::Class: {
      const double na = pair.source_a.nbar;
      const double sum = na + n;
      if (sum == 0.0) {
        throw std::domain_error(
            "visibility undefined for two empty coherent modes");
      }
      return 2.0 * na * n / (sum * sum);
    }
    case Pairing::C:
      return 1.0 / (1.0 + n / 2.0);
    case Pairing::T:
      return 1.0 / (1.0 + n);
    case Pairing::PC:
      return 1.0 / (1.0 + (n * n * n + 5.0 * n * n + 4.0 * n) /
                              (2.0 * (n * n + 3.0 * n + 1.0)));
    case Pairing::PT:
      return 1.0 / (1.0 + (6.0 * n * n * n + 10.0 * n * n + 4.0 * n) /
                              (2.0 * (n + 1.0) * (2.0 * n + 1.0)));
    case Pairing::QQ:
      return 1.0;
  }
  throw std::logic_error("unhandled pairing");
}

std::vector<double> visibility_vs_net(Pairing pairing,
                                      const std::vector<double>& net) {
  std::vector<double> out;
  out.reserve(net.size());
  for (double value : net) out.push_back(visibility(pair_from_net(pairing, value)));
  return out;
}

double nbar_from_visibility(Pairing pairing, double v) {
  if (!(v > 0.0) || v > 1.0) {
    throw std::invalid_argument("visibility must lie in (0, 1]");
  }
  switch (pairing) {
    case Pairing::C: return 2.0 * (1.0 - v) / v;
    case Pairing::T: return (1.0 - v) / v;
    default:
      throw std::invalid_argument(
          "closed-form visibility inverse exists only for pairings C and T");
  }
}

CorrelationCurve sample_curve(const PairConfig& pair, int count) {
  if (count < 2) throw std::invalid_argument("curve needs at least 2 samples");
  CorrelationCurve curve;
  curve.pairing = pair.pairing;
  curve.nbar = pair.source_b.nbar;
  curve.net = pair.pairing == Pairing::QQ ? 1.0
                                          : net_photon_number(pair.source_b);
  curve.dphi.reserve(count);
  curve.g2.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double d =
        2.0 * std::numbers::pi * static_cast<double>(i) / (count - 1);
    curve.dphi.push_back(d);
    curve.g2.push_back(g2(pair, 0.0, d));
  }
  return curve;
}

const char* to_string(Pairing pairing) {
  switch (pairing) {
    case Pairing::Class: return "Class";
    case Pairing::C: return "C";
    case Pairing::T: return "T";
    case Pairing::PC: return "PC";
    case Pairing::PT: return "PT";
    case Pairing::QQ: return "QQ";
  }
  return "?";
}

Pairing pairing_from_string(const std::string& label) {
  if (label == "Class") return Pairing::Class;
  if (label == "C") return Pairing::C;
  if (label == "T") return Pairing::T;
  if (label == "PC") return Pairing::PC;
  if (label == "PT") return Pairing::PT;
  if (label == "QQ") return Pairing::QQ;
  throw std::invalid_argument("unknown pairing label: " + label);
}

}  // namespace ppcorr
