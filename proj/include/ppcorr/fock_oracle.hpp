#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <stdexcept>

#include "ppcorr/correlations.hpp"

namespace ppcorr {

inline constexpr double kDefaultTailTol = 1e-12;
inline constexpr int kMaxTruncation = 512;

/// Raised when a requested truncation leaves too much state weight in the
/// tail, or when no admissible truncation exists below the cap. Carries the
/// diagnostics the CLI prints.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, SourceKind kind, double nbar,
                  int truncation, double tail, double tol)
      : std::runtime_error(what),
        kind(kind),
        nbar(nbar),
        truncation(truncation),
        tail(tail),
        tol(tol) {}

  SourceKind kind;
  double nbar;
  int truncation;
  double tail;
  double tol;
};

/// Density matrix of a field source in the number basis {|0>, ..., |N>},
/// renormalized after truncation. Rejects SinglePhoton (the emitter is a
/// two-level system, not a Fock mode) and truncations whose exact tail
/// weight reaches tail_tol.
Eigen::MatrixXcd build_state(const SourceModel& source, int truncation,
                             double tail_tol = kDefaultTailTol);

/// Truncated annihilation operator on {|0>, ..., |levels-1>}.
Eigen::MatrixXcd annihilation_matrix(int levels);

/// Exact probability weight the truncation at N discards, computed from
/// the analytic number distribution (not from the truncated vector).
double truncation_tail(const SourceModel& source, int truncation);

/// Smallest truncation N >= 1 whose exact tail is below tail_tol and whose
/// k = 2 moment is numerically stable against growing N by 5. Throws
/// TruncationError when no N <= kMaxTruncation qualifies.
int choose_truncation(const SourceModel& source,
                      double tail_tol = kDefaultTailTol);

/// <a†^k a^k> evaluated on the truncated density matrix, for cross-checking
/// the closed-form moment(). k in {1, 2}.
double moment_numeric(const SourceModel& source, int k, int truncation,
                      double tail_tol = kDefaultTailTol);

/// Two-source system assembled as a tensor product, with the positive
/// frequency field operator E+(phi) = S_A + e^{i phi} S_B acting on it.
/// Layout per pairing:
///  - mixed (C, T, PC, PT): two-level emitter (x) Fock mode, dim 2 (N+1)
///  - QQ: emitter (x) emitter, dim 4
///  - Class: Fock mode (x) Fock mode, dim (N+1)^2, each mode the
///    phase-averaged (Poissonian diagonal) coherent ensemble; independent
///    sources carry no fixed relative phase, and the pure projector would
///    add cross terms the ensemble average removes.
class FockSystem {
 public:
  FockSystem(const PairConfig& pair, int truncation,
             double tail_tol = kDefaultTailTol);

  Eigen::Index dim() const { return lower_a_.rows(); }
  int truncation() const { return truncation_; }

  const Eigen::MatrixXcd& lowering_a() const { return lower_a_; }
  const Eigen::MatrixXcd& lowering_b() const { return lower_b_; }

  /// E+(phi) as a dense matrix.
  Eigen::MatrixXcd field_operator(double phi) const;

  /// Full density matrix (assembled on demand; the evaluation below works
  /// from the pure/diagonal decomposition instead).
  Eigen::MatrixXcd density() const;

  /// tr(rho E-(phi1) E-(phi2) E+(phi2) E+(phi1)) by dense operator
  /// algebra. The result is real up to rounding; an imaginary residue
  /// beyond 1e-10 signals an implementation bug (std::logic_error).
  double g2(double phi1, double phi2) const;

 private:
  int truncation_ = 0;
  Eigen::MatrixXcd lower_a_;
  Eigen::MatrixXcd lower_b_;
  // rho is either a pure vector or diagonal in the product basis; both
  // forms keep the trace evaluation at one matrix product.
  std::optional<Eigen::VectorXcd> pure_state_;
  std::optional<Eigen::VectorXd> diagonal_weights_;
};

/// One-call numeric G2 for cross-verification against the closed form.
double g2_numeric(const PairConfig& pair, double phi1, double phi2,
                  int truncation, double tail_tol = kDefaultTailTol);

}  // namespace ppcorr
