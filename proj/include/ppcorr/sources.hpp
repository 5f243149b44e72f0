#pragma once

#include <string>

namespace ppcorr {

/// Photon statistics of a stationary single-mode source.
enum class SourceKind {
  SinglePhoton,  ///< two-level emitter prepared in its excited state
  Coherent,      ///< coherent state, mean photon number nbar
  Thermal,       ///< thermal (chaotic) state, mean photon number nbar
  Pacs,          ///< photon-added coherent state a† |alpha><alpha| a
  Pats,          ///< photon-added thermal state a† rho_th a
};

/// A source is its kind plus the mean photon number of the state the photon
/// was added to (seed nbar). For SinglePhoton the parameter is unused and
/// fixed to zero.
struct SourceModel {
  SourceKind kind = SourceKind::SinglePhoton;
  double nbar = 0.0;
};

SourceModel make_single_photon();
SourceModel make_coherent(double nbar);
SourceModel make_thermal(double nbar);
SourceModel make_pacs(double nbar);
SourceModel make_pats(double nbar);

/// Normally ordered intensity moment <a†^k a^k> for k in {1, 2}.
/// k = 1 is the mean intensity, k = 2 the unnormalized two-photon rate.
/// Throws std::invalid_argument for k outside {1, 2} or negative nbar.
double moment(const SourceModel& source, int k);

/// Net mean photon number <a†a> actually emitted. Photon addition shifts
/// this away from the seed nbar: Pacs and Pats emit at least one photon.
double net_photon_number(const SourceModel& source);

/// Inverse of net_photon_number for the parametric kinds. Rejects kinds
/// without a free nbar (SinglePhoton) and net values below the kind's
/// minimum (1 for Pacs/Pats, 0 for Coherent/Thermal).
double nbar_from_net(SourceKind kind, double net);

const char* to_string(SourceKind kind);

}  // namespace ppcorr
