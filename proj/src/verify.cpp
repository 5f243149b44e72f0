#include "ppcorr/verify.hpp"

#include <cmath>
#include <numbers>

namespace ppcorr {

namespace {

double rel_dev(double reference, double value) {
  return std::abs(reference - value) / std::max(1.0, std::abs(reference));
}

}  // namespace

VerifyResult run_verification(const VerifyOptions& options) {
  if (options.dphi_count < 1) {
    throw std::invalid_argument("dphi count must be >= 1");
  }
  if (!(options.tol > 0.0)) {
    throw std::invalid_argument("tolerance must be > 0");
  }
  std::vector<Pairing> pairings = options.pairings;
  if (pairings.empty()) {
    pairings = {Pairing::Class, Pairing::C,  Pairing::T,
                Pairing::PC,    Pairing::PT, Pairing::QQ};
  }
  std::vector<double> nbars = options.nbars;
  if (nbars.empty()) nbars = {0.0, 0.22, 0.29, 0.5, 1.0, 2.0};

  VerifyResult result;
  for (Pairing pairing : pairings) {
    for (double nbar : nbars) {
      const PairConfig pair = pair_from_nbar(pairing, nbar);
      int truncation = 1;
      if (options.truncation) {
        truncation = *options.truncation;
      } else if (pairing == Pairing::Class) {
        truncation =
            std::max(choose_truncation(pair.source_a, options.tail_tol),
                     choose_truncation(pair.source_b, options.tail_tol));
      } else if (pairing != Pairing::QQ) {
        truncation = choose_truncation(pair.source_b, options.tail_tol);
      }
      const FockSystem system(pair, truncation, options.tail_tol);
      for (int i = 0; i < options.dphi_count; ++i) {
        const double dphi =
            2.0 * std::numbers::pi * i / options.dphi_count;
        VerifyCase c;
        c.pairing = pairing;
        c.nbar = nbar;
        c.dphi = dphi;
        c.truncation = truncation;
        c.analytic = g2(pair, 0.0, dphi);
        c.numeric = system.g2(0.0, dphi);
        c.deviation = rel_dev(c.analytic, c.numeric);
        result.max_deviation = std::max(result.max_deviation, c.deviation);
        result.g2_cases.push_back(c);
      }
      if (pairing == Pairing::QQ) break;  // nbar plays no role
    }
  }

  // Source moments, one grid per field kind that appears in the requested
  // pairings (Class contributes coherent).
  std::vector<SourceKind> kinds;
  auto want = [&](SourceKind kind) {
    for (SourceKind k : kinds) {
      if (k == kind) return;
    }
    kinds.push_back(kind);
  };
  for (Pairing pairing : pairings) {
    switch (pairing) {
      case Pairing::Class:
      case Pairing::C: want(SourceKind::Coherent); break;
      case Pairing::T: want(SourceKind::Thermal); break;
      case Pairing::PC: want(SourceKind::Pacs); break;
      case Pairing::PT: want(SourceKind::Pats); break;
      case Pairing::QQ: break;
    }
  }
  for (SourceKind kind : kinds) {
    for (double nbar : nbars) {
      const SourceModel source{kind, nbar};
      const int truncation = options.truncation
                                 ? *options.truncation
                                 : choose_truncation(source, options.tail_tol);
      for (int k = 1; k <= 2; ++k) {
        MomentCase c;
        c.kind = kind;
        c.nbar = nbar;
        c.k = k;
        c.truncation = truncation;
        c.analytic = moment(source, k);
        c.numeric = moment_numeric(source, k, truncation, options.tail_tol);
        c.deviation = rel_dev(c.analytic, c.numeric);
        result.max_deviation = std::max(result.max_deviation, c.deviation);
        result.moment_cases.push_back(c);
      }
    }
  }

  result.ok = result.max_deviation <= options.tol;
  return result;
}

}  // namespace ppcorr
