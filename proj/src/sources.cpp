#include "ppcorr/sources.hpp"

#include <cmath>
#include <stdexcept>

namespace ppcorr {

namespace {

void check_nbar(double nbar) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw std::invalid_argument("source nbar must be finite and >= 0, got " +
                                std::to_string(nbar));
  }
}

}  // namespace

SourceModel make_single_photon() { return {SourceKind::SinglePhoton, 0.0}; }

SourceModel make_coherent(double nbar) {
  check_nbar(nbar);
  return {SourceKind::Coherent, nbar};
}

SourceModel make_thermal(double nbar) {
  check_nbar(nbar);
  return {SourceKind::Thermal, nbar};
}

SourceModel make_pacs(double nbar) {
  check_nbar(nbar);
  return {SourceKind::Pacs, nbar};
}

SourceModel make_pats(double nbar) {
  check_nbar(nbar);
  return {SourceKind::Pats, nbar};
}

double moment(const SourceModel& source, int k) {
  if (k != 1 && k != 2) {
    throw std::invalid_argument("moment order k must be 1 or 2, got " +
                                std::to_string(k));
  }
  const double n = source.nbar;
  if (source.kind != SourceKind::SinglePhoton) check_nbar(n);
  switch (source.kind) {
    case SourceKind::SinglePhoton:
      // A single two-level emitter saturates at one photon: <s+ s-> = 1,
      // <s+^2 s-^2> = 0.
      return k == 1 ? 1.0 : 0.0;
    case SourceKind::Coherent:
      return k == 1 ? n : n * n;
    case SourceKind::Thermal:
      return k == 1 ? n : 2.0 * n * n;
    case SourceKind::Pacs:
      return k == 1 ? (n * n + 3.0 * n + 1.0) / (1.0 + n) : n * n + 4.0 * n;
    case SourceKind::Pats:
      return k == 1 ? 2.0 * n + 1.0 : 6.0 * n * n + 4.0 * n;
  }
  throw std::logic_error("unhandled source kind");
}

double net_photon_number(const SourceModel& source) {
  return moment(source, 1);
}

double nbar_from_net(SourceKind kind, double net) {
  if (!std::isfinite(net)) {
    throw std::invalid_argument("net photon number must be finite");
  }
  switch (kind) {
    case SourceKind::SinglePhoton:
      throw std::invalid_argument(
          "single-photon source has no free nbar parameter");
    case SourceKind::Coherent:
    case SourceKind::Thermal:
      if (net < 0.0) {
        throw std::invalid_argument("net photon number must be >= 0 for " +
                                    std::string(to_string(kind)));
      }
      return net;
    case SourceKind::Pacs: {
      if (net < 1.0) {
        throw std::invalid_argument(
            "photon-added coherent source emits at least one photon (net >= "
            "1)");
      }
      // Positive root of nbar^2 + (3 - net) nbar + (1 - net) = 0.
      return -1.5 + 0.5 * net + 0.5 * std::sqrt(5.0 - 2.0 * net + net * net);
    }
    case SourceKind::Pats:
      if (net < 1.0) {
        throw std::invalid_argument(
            "photon-added thermal source emits at least one photon (net >= "
            "1)");
      }
      return 0.5 * (net - 1.0);
  }
  throw std::logic_error("unhandled source kind");
}

const char* to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::SinglePhoton: return "single";
    case SourceKind::Coherent: return "coherent";
    case SourceKind::Thermal: return "thermal";
    case SourceKind::Pacs: return "pacs";
    case SourceKind::Pats: return "pats";
  }
  return "?";
}

}  // namespace ppcorr
