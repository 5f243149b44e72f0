#include "ppcorr/fock_oracle.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <string>
#include <vector>

namespace ppcorr {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using std::complex;

void check_truncation_arg(int truncation) {
  if (truncation < 1) {
    throw std::invalid_argument("truncation must be >= 1, got " +
                                std::to_string(truncation));
  }
}

std::string compact(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%g", value);
  return buffer;
}

void check_tail_tol(double tail_tol) {
  if (!(tail_tol > 0.0) || tail_tol > 1e-3) {
    throw std::invalid_argument("tail tolerance must lie in (0, 1e-3]");
  }
}

// Exact number-basis populations p_0..p_{count-1} of the untruncated state
// (no renormalization; the discarded tail is 1 - sum).
std::vector<double> populations(const SourceModel& source, int count) {
  std::vector<double> p(count, 0.0);
  const double n = source.nbar;
  switch (source.kind) {
    case SourceKind::Coherent: {
      p[0] = std::exp(-n);
      for (int i = 1; i < count; ++i) p[i] = p[i - 1] * n / i;
      return p;
    }
    case SourceKind::Thermal: {
      const double q = n / (n + 1.0);
      p[0] = 1.0 / (n + 1.0);
      for (int i = 1; i < count; ++i) p[i] = p[i - 1] * q;
      return p;
    }
    case SourceKind::Pacs: {
      // Adding a photon to |alpha> weights level m by m * Pois(m-1).
      double pois = std::exp(-n);  // Poisson weight at m - 1
      for (int m = 1; m < count; ++m) {
        p[m] = m * pois / (1.0 + n);
        pois *= n / m;
      }
      return p;
    }
    case SourceKind::Pats: {
      if (n == 0.0) {
        // Limit state of thermal photon addition at zero seed: exactly |1>.
        if (count > 1) p[1] = 1.0;
        return p;
      }
      const double q = n / (n + 1.0);
      double qi = q;  // q^i
      for (int i = 1; i < count; ++i) {
        p[i] = i * qi / (n * (n + 1.0));
        qi *= q;
      }
      return p;
    }
    case SourceKind::SinglePhoton:
      throw std::invalid_argument(
          "the single-photon emitter is a two-level system, not a Fock "
          "mode");
  }
  throw std::logic_error("unhandled source kind");
}

// Sum of p_n for n > truncation, accumulated from below (forward recurrence
// on the analytic weights, not 1 - prefix, to avoid cancellation).
double exact_tail(const SourceModel& source, int truncation) {
  const double n = source.nbar;
  switch (source.kind) {
    case SourceKind::Thermal: {
      const double q = n / (n + 1.0);
      return std::pow(q, truncation + 1);
    }
    case SourceKind::Pats: {
      if (n == 0.0) return truncation >= 1 ? 0.0 : 1.0;
      const double q = n / (n + 1.0);
      const int N = truncation;
      // sum_{i>N} i q^i / (n (n+1)) = q^N ((N+1) - N q)
      return std::pow(q, N) * ((N + 1.0) - N * q);
    }
    case SourceKind::Coherent:
    case SourceKind::Pacs: {
      // Poissonian tails decay superexponentially past the mean; sum the
      // analytic weights upward until they stop contributing. For pacs the
      // level-m weight is m * Pois(m-1) / (1+n), so its tail after N runs
      // over Poisson indices j >= N.
      const int start = source.kind == SourceKind::Coherent ? truncation + 1
                                                            : truncation;
      double pois = std::exp(-n);  // Pois(j), advanced below
      for (int j = 1; j <= start; ++j) pois *= n / j;
      double tail = 0.0;
      for (int j = start; j < start + 400000; ++j) {
        tail += source.kind == SourceKind::Coherent
                    ? pois
                    : (j + 1.0) * pois / (1.0 + n);
        if (j > n && pois < 1e-30 * (1.0 + tail)) break;
        pois *= n / (j + 1);
      }
      return tail;
    }
    case SourceKind::SinglePhoton:
      throw std::invalid_argument(
          "the single-photon emitter is a two-level system, not a Fock "
          "mode");
  }
  throw std::logic_error("unhandled source kind");
}

void check_tail(const SourceModel& source, int truncation, double tail_tol) {
  const double tail = exact_tail(source, truncation);
  if (tail >= tail_tol) {
    throw TruncationError(
        "truncation at N = " + std::to_string(truncation) + " for " +
            to_string(source.kind) + " (nbar = " + compact(source.nbar) +
            ") leaves tail weight " + compact(tail) + " >= tolerance " +
            compact(tail_tol),
        source.kind, source.nbar, truncation, tail, tail_tol);
  }
}

// Pure state vector for the projector kinds (coherent, pacs), renormalized
// on the truncated space.
VectorXcd state_vector(const SourceModel& source, int truncation) {
  const int levels = truncation + 1;
  const double n = source.nbar;
  VectorXcd c = VectorXcd::Zero(levels);
  c[0] = std::exp(-0.5 * n);
  for (int i = 1; i < levels; ++i) c[i] = c[i - 1] * std::sqrt(n / i);
  if (source.kind == SourceKind::Coherent) {
    return c / c.norm();
  }
  // pacs: apply the truncated creation operator, then renormalize.
  VectorXcd v = VectorXcd::Zero(levels);
  for (int m = 1; m < levels; ++m) v[m] = std::sqrt(double(m)) * c[m - 1];
  return v / v.norm();
}

// Diagonal weights for the mixture kinds (thermal, pats), renormalized.
VectorXd state_diagonal(const SourceModel& source, int truncation) {
  const std::vector<double> p = populations(source, truncation + 1);
  VectorXd w = Eigen::Map<const VectorXd>(p.data(), p.size());
  return w / w.sum();
}

bool is_projector_kind(SourceKind kind) {
  return kind == SourceKind::Coherent || kind == SourceKind::Pacs;
}

MatrixXcd emitter_lowering() {
  // Basis {|g>, |e>}; s = |g><e|.
  MatrixXcd s = MatrixXcd::Zero(2, 2);
  s(0, 1) = 1.0;
  return s;
}

}  // namespace

Eigen::MatrixXcd annihilation_matrix(int levels) {
  if (levels < 1) throw std::invalid_argument("need at least one level");
  MatrixXcd a = MatrixXcd::Zero(levels, levels);
  for (int m = 1; m < levels; ++m) a(m - 1, m) = std::sqrt(double(m));
  return a;
}

double truncation_tail(const SourceModel& source, int truncation) {
  check_truncation_arg(truncation);
  if (!(source.nbar >= 0.0) || !std::isfinite(source.nbar)) {
    throw std::invalid_argument("source nbar must be finite and >= 0");
  }
  return exact_tail(source, truncation);
}

Eigen::MatrixXcd build_state(const SourceModel& source, int truncation,
                             double tail_tol) {
  check_truncation_arg(truncation);
  check_tail_tol(tail_tol);
  check_tail(source, truncation, tail_tol);
  if (is_projector_kind(source.kind)) {
    const VectorXcd v = state_vector(source, truncation);
    return v * v.adjoint();
  }
  const VectorXd w = state_diagonal(source, truncation);
  return w.cast<complex<double>>().asDiagonal();
}

int choose_truncation(const SourceModel& source, double tail_tol) {
  check_tail_tol(tail_tol);
  // Populations up to the cap plus the stability lookahead.
  const int lookahead = 5;
  const std::vector<double> p =
      populations(source, kMaxTruncation + lookahead + 1);
  auto m2_at = [&](int n_max) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i <= n_max; ++i) {
      num += p[i] * i * (i - 1.0);
      den += p[i];
    }
    return den > 0.0 ? num / den : 0.0;
  };
  for (int n = 1; n <= kMaxTruncation; ++n) {
    if (exact_tail(source, n) >= tail_tol) continue;
    const double m2_now = m2_at(n);
    const double m2_next = m2_at(n + lookahead);
    if (std::abs(m2_next - m2_now) <=
        tail_tol * std::max(1.0, std::abs(m2_next))) {
      return n;
    }
  }
  const double tail_at_cap = exact_tail(source, kMaxTruncation);
  throw TruncationError(
      "no admissible truncation <= " + std::to_string(kMaxTruncation) +
          " for " + to_string(source.kind) + " (nbar = " + compact(source.nbar) +
          "); tail at the cap is " + compact(tail_at_cap),
      source.kind, source.nbar, kMaxTruncation, tail_at_cap, tail_tol);
}

double moment_numeric(const SourceModel& source, int k, int truncation,
                      double tail_tol) {
  if (k != 1 && k != 2) {
    throw std::invalid_argument("moment order k must be 1 or 2");
  }
  check_truncation_arg(truncation);
  check_tail_tol(tail_tol);
  check_tail(source, truncation, tail_tol);
  const int levels = truncation + 1;
  const MatrixXcd a = annihilation_matrix(levels);
  // a^k never leaves the truncated space, so <(a†)^k a^k> = sum of
  // ||a^k v||^2 over the state decomposition; evaluated as a literal trace.
  const MatrixXcd ak = k == 1 ? a : MatrixXcd(a * a);
  complex<double> value(0.0, 0.0);
  if (is_projector_kind(source.kind)) {
    const VectorXcd v = state_vector(source, truncation);
    const VectorXcd u = ak * v;
    value = u.dot(u);
  } else {
    const VectorXd w = state_diagonal(source, truncation);
    for (int i = 0; i < levels; ++i) {
      value += w[i] * ak.col(i).dot(ak.col(i));
    }
  }
  if (std::abs(value.imag()) > 1e-10 * std::max(1.0, std::abs(value.real()))) {
    throw std::logic_error("numeric moment has a non-real residue");
  }
  return value.real();
}

FockSystem::FockSystem(const PairConfig& pair, int truncation,
                       double tail_tol) {
  validate(pair);
  check_truncation_arg(truncation);
  check_tail_tol(tail_tol);
  truncation_ = truncation;
  const int levels = truncation + 1;
  switch (pair.pairing) {
    case Pairing::QQ: {
      const MatrixXcd s = emitter_lowering();
      const MatrixXcd id = MatrixXcd::Identity(2, 2);
      lower_a_ = Eigen::kroneckerProduct(s, id);
      lower_b_ = Eigen::kroneckerProduct(id, s);
      VectorXcd excited = VectorXcd::Zero(2);
      excited[1] = 1.0;
      pure_state_ = Eigen::kroneckerProduct(excited, excited).eval();
      return;
    }
    case Pairing::Class: {
      check_tail(pair.source_a, truncation, tail_tol);
      check_tail(pair.source_b, truncation, tail_tol);
      const MatrixXcd a = annihilation_matrix(levels);
      const MatrixXcd id = MatrixXcd::Identity(levels, levels);
      lower_a_ = Eigen::kroneckerProduct(a, id);
      lower_b_ = Eigen::kroneckerProduct(id, a);
      // Independent sources have no common phase reference: each mode is
      // the phase-averaged coherent ensemble, i.e. Poissonian diagonal.
      const VectorXd wa = state_diagonal(
          {SourceKind::Coherent, pair.source_a.nbar}, truncation);
      const VectorXd wb = state_diagonal(
          {SourceKind::Coherent, pair.source_b.nbar}, truncation);
      diagonal_weights_ = Eigen::kroneckerProduct(wa, wb).eval();
      return;
    }
    default: {  // mixed pairings: emitter (x) Fock mode
      check_tail(pair.source_b, truncation, tail_tol);
      const MatrixXcd s = emitter_lowering();
      const MatrixXcd id2 = MatrixXcd::Identity(2, 2);
      const MatrixXcd a = annihilation_matrix(levels);
      const MatrixXcd idf = MatrixXcd::Identity(levels, levels);
      lower_a_ = Eigen::kroneckerProduct(s, idf);
      lower_b_ = Eigen::kroneckerProduct(id2, a);
      if (is_projector_kind(pair.source_b.kind)) {
        const VectorXcd v = state_vector(pair.source_b, truncation);
        VectorXcd excited = VectorXcd::Zero(2);
        excited[1] = 1.0;
        pure_state_ = Eigen::kroneckerProduct(excited, v).eval();
      } else {
        const VectorXd w = state_diagonal(pair.source_b, truncation);
        VectorXd atom = VectorXd::Zero(2);
        atom[1] = 1.0;
        diagonal_weights_ = Eigen::kroneckerProduct(atom, w).eval();
      }
      return;
    }
  }
}

Eigen::MatrixXcd FockSystem::field_operator(double phi) const {
  return lower_a_ + std::polar(1.0, phi) * lower_b_;
}

Eigen::MatrixXcd FockSystem::density() const {
  if (pure_state_) return *pure_state_ * pure_state_->adjoint();
  return diagonal_weights_->cast<complex<double>>().asDiagonal();
}

double FockSystem::g2(double phi1, double phi2) const {
  // tr(rho P† P) with P = E+(phi2) E+(phi1), evaluated through the
  // pure/diagonal decomposition of rho (same trace, one matrix product).
  const MatrixXcd p = field_operator(phi2) * field_operator(phi1);
  complex<double> value(0.0, 0.0);
  if (pure_state_) {
    const VectorXcd u = p * *pure_state_;
    value = u.dot(u);
  } else {
    const VectorXd& w = *diagonal_weights_;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      if (w[i] == 0.0) continue;
      value += w[i] * p.col(i).dot(p.col(i));
    }
  }
  if (std::abs(value.imag()) > 1e-10 * std::max(1.0, std::abs(value.real()))) {
    throw std::logic_error("numeric g2 has a non-real residue");
  }
  return value.real();
}

double g2_numeric(const PairConfig& pair, double phi1, double phi2,
                  int truncation, double tail_tol) {
  return FockSystem(pair, truncation, tail_tol).g2(phi1, phi2);
}

}  // namespace ppcorr
