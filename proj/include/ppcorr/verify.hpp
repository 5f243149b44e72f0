#pragma once

#include <optional>
#include <vector>

#include "ppcorr/correlations.hpp"
#include "ppcorr/fock_oracle.hpp"

namespace ppcorr {

/// What to cross-verify between the closed forms and the Fock engine.
struct VerifyOptions {
  std::vector<Pairing> pairings;  ///< empty = all six
  std::vector<double> nbars;      ///< empty = {0, 0.22, 0.29, 0.5, 1, 2}
  int dphi_count = 16;            ///< evenly spaced in [0, 2 pi)
  double tol = 1e-9;              ///< relative deviation threshold
  double tail_tol = kDefaultTailTol;
  std::optional<int> truncation;  ///< force N instead of choose_truncation
};

struct VerifyCase {
  Pairing pairing = Pairing::QQ;
  double nbar = 0.0;
  double dphi = 0.0;
  int truncation = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  double deviation = 0.0;  ///< |analytic - numeric| / max(1, |analytic|)
};

struct MomentCase {
  SourceKind kind = SourceKind::Coherent;
  double nbar = 0.0;
  int k = 1;
  int truncation = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  double deviation = 0.0;
};

struct VerifyResult {
  std::vector<VerifyCase> g2_cases;
  std::vector<MomentCase> moment_cases;
  double max_deviation = 0.0;
  bool ok = false;  ///< max_deviation <= tol
};

/// Runs the G2 grid (pairings x nbars x dphi) and the source-moment grid
/// through both engines. Propagates TruncationError when a forced or
/// chosen truncation is inadmissible.
VerifyResult run_verification(const VerifyOptions& options);

}  // namespace ppcorr
