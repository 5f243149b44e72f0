#include "ppcorr/correlations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace ppcorr;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<Pairing> kAllPairings = {Pairing::Class, Pairing::C,
                                           Pairing::T,     Pairing::PC,
                                           Pairing::PT,    Pairing::QQ};
const std::vector<double> kNbarGrid = {0.0, 0.22, 0.29, 0.5, 1.0, 2.0, 5.0};

}  // namespace

TEST_CASE("detector phase from geometry") {
  // (2 pi / 0.5) * 2 * sin(pi / 6) = 8 pi * 1/2.
  CHECK(phase_from_geometry({0.5, 2.0}, kPi / 6.0) ==
        doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK(phase_from_geometry({1.0, 1.0}, 0.0) == 0.0);
  CHECK(phase_from_geometry({2.0, 3.0}, kPi / 2.0) ==
        doctest::Approx(3.0 * kPi).epsilon(1e-14));
  CHECK_THROWS_AS((void)phase_from_geometry({0.0, 1.0}, 0.3),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)phase_from_geometry({1.0, -1.0}, 0.3),
                  std::invalid_argument);
}

TEST_CASE("g2 closed-form spot values") {
  CHECK(g2(make_mixed(SourceKind::Thermal, 1.0), 0.0, 0.0) ==
        doctest::Approx(6.0));
  CHECK(g2(make_classical(1.0, 1.0), 0.0, kPi) == doctest::Approx(2.0));
  CHECK(g2(make_mixed(SourceKind::Pacs, 0.0), 0.0, 0.0) ==
        doctest::Approx(4.0));
  CHECK(g2(make_two_emitters(), 0.0, kPi) == doctest::Approx(0.0));
  CHECK(g2(make_two_emitters(), 0.0, 0.0) == doctest::Approx(4.0));
  // Coherent admixture: nbar^2 + 2 nbar (1 + cos).
  CHECK(g2(make_mixed(SourceKind::Coherent, 0.5), 0.0, kPi / 2.0) ==
        doctest::Approx(1.25));
}

TEST_CASE("g2 depends on the phases only through their difference") {
  for (Pairing pairing : kAllPairings) {
    for (double nbar : {0.0, 0.5, 2.0}) {
      const PairConfig pair = pair_from_nbar(pairing, nbar);
      for (double dphi : {0.0, 0.4, kPi / 2.0, kPi, 4.9}) {
        const double base = g2(pair, 0.0, dphi);
        for (double offset : {0.3, 1.7, -2.2}) {
          CHECK(g2(pair, offset, offset + dphi) ==
                doctest::Approx(base).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("g2 is nonnegative and peaks at zero phase difference") {
  for (Pairing pairing : kAllPairings) {
    for (double nbar : kNbarGrid) {
      const PairConfig pair = pair_from_nbar(pairing, nbar);
      const double peak = g2(pair, 0.0, 0.0);
      for (int i = 0; i <= 64; ++i) {
        const double dphi = 2.0 * kPi * i / 64.0;
        const double value = g2(pair, 0.0, dphi);
        CHECK(value >= -1e-15);
        CHECK(value <= peak * (1.0 + 1e-12) + 1e-15);
      }
    }
  }
}

TEST_CASE("g2 decomposes into source moments") {
  // G2 = <I_A^2> + <I_B^2> + 2 <I_A><I_B> (1 + cos dphi) for every pairing.
  for (Pairing pairing : kAllPairings) {
    for (double nbar : kNbarGrid) {
      const PairConfig pair = pair_from_nbar(pairing, nbar);
      const PairMoments m = pair_moments(pair);
      for (double dphi : {0.0, 0.7, kPi, 5.1}) {
        const double expected = m.square_a + m.square_b +
                                2.0 * m.mean_a * m.mean_b *
                                    (1.0 + std::cos(dphi));
        CHECK(g2(pair, 0.0, dphi) ==
              doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("visibility spot values") {
  CHECK(visibility(make_mixed(SourceKind::Coherent, 1.0)) ==
        doctest::Approx(2.0 / 3.0));
  CHECK(visibility(make_mixed(SourceKind::Thermal, 1.0)) ==
        doctest::Approx(0.5));
  CHECK(visibility(make_mixed(SourceKind::Pats, 1.0)) ==
        doctest::Approx(0.375));
  CHECK(visibility(make_two_emitters()) == 1.0);
  CHECK(visibility(make_classical(1.0, 1.0)) == doctest::Approx(0.5));
  // Unbalanced classical modes lose contrast: 2 ab / (a + b)^2.
  CHECK(visibility(make_classical(4.0, 1.0)) == doctest::Approx(8.0 / 25.0));
}

TEST_CASE("visibility equals the sampled interference contrast") {
  for (Pairing pairing : kAllPairings) {
    for (double nbar : kNbarGrid) {
      const PairConfig pair = pair_from_nbar(pairing, nbar);
      const double peak = g2(pair, 0.0, 0.0);
      const double dip = g2(pair, 0.0, kPi);
      // An empty field mode carries no correlation signal; the closed form
      // returns the nbar -> 0 limit there, but there is no contrast to
      // sample.
      if (peak + dip == 0.0) continue;
      const double contrast = (peak - dip) / (peak + dip);
      CHECK(visibility(pair) == doctest::Approx(contrast).epsilon(1e-12));
      CHECK(visibility(pair) >= 0.0);
      CHECK(visibility(pair) <= 1.0);
    }
  }
}

TEST_CASE("visibility against net photon number") {
  const std::vector<double> net = {2.5};
  CHECK(visibility_vs_net(Pairing::PC, net)[0] == doctest::Approx(0.5));
  // Matches composing the inversion with the visibility.
  for (Pairing pairing : {Pairing::C, Pairing::T, Pairing::PC, Pairing::PT}) {
    const std::vector<double> grid = {1.0, 1.5, 2.0, 4.0, 9.0};
    const std::vector<double> values = visibility_vs_net(pairing, grid);
    REQUIRE(values.size() == grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
      CHECK(values[i] ==
            doctest::Approx(visibility(pair_from_net(pairing, grid[i]))));
      if (i > 0) CHECK(values[i] < values[i - 1]);  // strictly decreasing
    }
  }
}

TEST_CASE("visibility inversion for C and T") {
  CHECK(nbar_from_visibility(Pairing::C, 2.0 / 3.0) == doctest::Approx(1.0));
  CHECK(nbar_from_visibility(Pairing::T, 0.5) == doctest::Approx(1.0));
  for (double nbar : {0.0, 0.3, 1.0, 4.0}) {
    CHECK(nbar_from_visibility(
              Pairing::C, visibility(make_mixed(SourceKind::Coherent, nbar))) ==
          doctest::Approx(nbar).epsilon(1e-12));
    CHECK(nbar_from_visibility(
              Pairing::T, visibility(make_mixed(SourceKind::Thermal, nbar))) ==
          doctest::Approx(nbar).epsilon(1e-12));
  }
  CHECK_THROWS_AS((void)nbar_from_visibility(Pairing::C, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)nbar_from_visibility(Pairing::C, 1.5),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)nbar_from_visibility(Pairing::PC, 0.5),
                  std::invalid_argument);
}

TEST_CASE("correlation curve sampling") {
  const PairConfig pair = make_mixed(SourceKind::Thermal, 0.5);
  const CorrelationCurve curve = sample_curve(pair, 65);
  REQUIRE(curve.dphi.size() == 65);
  REQUIRE(curve.g2.size() == 65);
  CHECK(curve.pairing == Pairing::T);
  CHECK(curve.nbar == doctest::Approx(0.5));
  CHECK(curve.net == doctest::Approx(0.5));
  CHECK(curve.dphi.front() == 0.0);
  CHECK(curve.dphi.back() == doctest::Approx(2.0 * kPi));
  // Periodic: the two endpoints sample the same physical point.
  CHECK(curve.g2.front() == doctest::Approx(curve.g2.back()).epsilon(1e-12));
  CHECK_THROWS_AS((void)sample_curve(pair, 1), std::invalid_argument);
}

TEST_CASE("pair validation rejects mismatched tags") {
  PairConfig bad = make_mixed(SourceKind::Thermal, 1.0);
  bad.pairing = Pairing::C;
  CHECK_THROWS_AS((void)g2(bad, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  CHECK_THROWS_AS((void)make_mixed(SourceKind::SinglePhoton, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)visibility(make_classical(0.0, 0.0)),
                  std::domain_error);
  CHECK_NOTHROW(validate(make_two_emitters()));
}

TEST_CASE("pairing labels round trip") {
  for (Pairing pairing : kAllPairings) {
    CHECK(pairing_from_string(to_string(pairing)) == pairing);
  }
  CHECK_THROWS_AS((void)pairing_from_string("XYZ"), std::invalid_argument);
}
