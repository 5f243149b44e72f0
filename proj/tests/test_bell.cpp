#include "ppcorr/bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace ppcorr;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRoot2 = std::numbers::sqrt2;

const std::vector<Pairing> kAllPairings = {Pairing::Class, Pairing::C,
                                           Pairing::T,     Pairing::PC,
                                           Pairing::PT,    Pairing::QQ};
const std::vector<Pairing> kChannelPairings = {Pairing::C, Pairing::T,
                                               Pairing::PC, Pairing::PT,
                                               Pairing::QQ};

}  // namespace

TEST_CASE("normalized correlator spot values") {
  CHECK(normalized_g2(make_two_emitters(), 0.0, kPi) == doctest::Approx(-1.0));
  CHECK(normalized_g2(make_mixed(SourceKind::Thermal, 1.0), 0.0, 0.0) ==
        doctest::Approx(0.5));
  CHECK_THROWS_AS((void)normalized_g2(make_classical(0.0, 0.0), 0.0, 0.0),
                  std::domain_error);
}

TEST_CASE("normalized correlator is the visibility times cos dphi") {
  for (Pairing pairing : kAllPairings) {
    for (double nbar : {0.0, 0.22, 0.5, 1.0, 2.0}) {
      const PairConfig pair = pair_from_nbar(pairing, nbar);
      // An empty field mode produces no coincidences to normalize by.
      if (mean_square_intensity(pair) == 0.0) continue;
      const double v = visibility(pair);
      for (int i = 0; i < 16; ++i) {
        const double dphi = 2.0 * kPi * i / 16.0;
        CHECK(normalized_g2(pair, 0.3, 0.3 + dphi) ==
              doctest::Approx(v * std::cos(dphi)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("chsh at the optimal angles") {
  const ChshReport qq = chsh_max(make_two_emitters());
  CHECK(qq.chsh_value == doctest::Approx(2.0 * kRoot2).epsilon(1e-14));
  CHECK(qq.violated);
  const ChshReport t = chsh_max(make_mixed(SourceKind::Thermal, 1.0));
  CHECK(t.chsh_value == doctest::Approx(kRoot2).epsilon(1e-14));
  CHECK_FALSE(t.violated);
  // The generic evaluator at the same angles agrees with 2 sqrt(2) V.
  for (Pairing pairing : kAllPairings) {
    for (double nbar : {0.1, 0.5, 1.5}) {
      const PairConfig pair = pair_from_nbar(pairing, nbar);
      const ChshReport direct = chsh(pair, chsh_max(pair).angles);
      CHECK(direct.chsh_value ==
            doctest::Approx(2.0 * kRoot2 * visibility(pair)).epsilon(1e-12));
    }
  }
}

TEST_CASE("no angle set beats the optimal value") {
  const std::vector<ChshAngles> trials = {
      ChshAngles{0.0, kPi / 2.0, kPi / 4.0, 3.0 * kPi / 4.0},
      ChshAngles{0.1, 1.3, 2.9, 4.4},
      ChshAngles{0.0, kPi / 3.0, kPi / 5.0, kPi},
      ChshAngles{-0.7, 0.4, 1.9, -2.2},
  };
  for (Pairing pairing : kAllPairings) {
    const PairConfig pair = pair_from_nbar(pairing, 0.8);
    const double best = chsh_max(pair).chsh_value;
    for (const ChshAngles& angles : trials) {
      const ChshReport r = chsh(pair, angles);
      CHECK(r.chsh_value <= best * (1.0 + 1e-12));
      CHECK(r.violated == (r.chsh_value > 2.0));
    }
  }
}

TEST_CASE("bell thresholds") {
  CHECK(bell_threshold(Pairing::C) ==
        doctest::Approx(2.0 * (kRoot2 - 1.0)).epsilon(1e-14));
  CHECK(bell_threshold(Pairing::T) ==
        doctest::Approx(kRoot2 - 1.0).epsilon(1e-14));
  const double pt = bell_threshold(Pairing::PT);
  CHECK(pt > 1.444);
  CHECK(pt < 1.455);
  // Root of 3 net^2 + (2 - 4 sqrt(2)) net - 1.
  CHECK(3.0 * pt * pt + (2.0 - 4.0 * kRoot2) * pt - 1.0 ==
        doctest::Approx(0.0).epsilon(1e-12));
  const double pc = bell_threshold(Pairing::PC);
  CHECK(pc > 1.51);
  CHECK(pc < 1.53);
  CHECK_THROWS_AS((void)bell_threshold(Pairing::Class), std::invalid_argument);
  CHECK_THROWS_AS((void)bell_threshold(Pairing::QQ), std::invalid_argument);
}

TEST_CASE("visibility crosses 1/sqrt(2) exactly at the threshold") {
  for (Pairing pairing : {Pairing::C, Pairing::T, Pairing::PC, Pairing::PT}) {
    const double net = bell_threshold(pairing);
    CHECK(visibility(pair_from_net(pairing, net)) ==
          doctest::Approx(1.0 / kRoot2).epsilon(1e-9));
    CHECK(chsh_max(pair_from_net(pairing, net * 0.99)).violated);
    CHECK_FALSE(chsh_max(pair_from_net(pairing, net * 1.01)).violated);
  }
}

TEST_CASE("double channel rates spot values") {
  const FourChannelRates r =
      double_channel_rates(make_mixed(SourceKind::Thermal, 1.0), 0.0, 0.0);
  CHECK(r.plus_plus == doctest::Approx(6.0));
  CHECK(r.plus_minus == doctest::Approx(2.0));
  CHECK(r.minus_plus == doctest::Approx(2.0));
  CHECK(r.minus_minus == doctest::Approx(6.0));
  CHECK(correlation_from_rates(r) == doctest::Approx(0.5));
  CHECK_THROWS_AS(
      (void)double_channel_rates(make_classical(1.0, 1.0), 0.0, 0.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)double_channel_rates(make_two_emitters(), 0.0, 0.0, 0.0, 1.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)double_channel_rates(make_two_emitters(), 0.0, 0.0, 1.0, 1.2),
      std::invalid_argument);
}

TEST_CASE("rates are nonnegative and their correlation matches the theory") {
  for (Pairing pairing : kChannelPairings) {
    for (double nbar : {0.0, 0.3, 1.0, 2.5}) {
      const PairConfig pair = pair_from_nbar(pairing, nbar);
      if (mean_square_intensity(pair) == 0.0) continue;
      const double v = visibility(pair);
      for (int i = 0; i < 8; ++i) {
        const double dphi = 2.0 * kPi * i / 8.0;
        const FourChannelRates r = double_channel_rates(pair, 0.0, dphi);
        CHECK(r.plus_plus >= 0.0);
        CHECK(r.plus_minus >= 0.0);
        CHECK(r.minus_plus >= 0.0);
        CHECK(r.minus_minus >= 0.0);
        CHECK(correlation_from_rates(r) ==
              doctest::Approx(v * std::cos(dphi)).epsilon(1e-12));
        CHECK(correlation_from_rates(r) ==
              doctest::Approx(normalized_g2(pair, 0.0, dphi)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("detector efficiencies cancel in the correlation") {
  const PairConfig pair = make_mixed(SourceKind::Pats, 0.7);
  const double reference = correlation_from_rates(
      double_channel_rates(pair, 0.0, 1.1, 1.0, 1.0));
  for (double eta1 : {0.01, 0.2, 0.5, 0.9}) {
    for (double eta2 : {0.05, 0.37, 1.0}) {
      const FourChannelRates r =
          double_channel_rates(pair, 0.0, 1.1, eta1, eta2);
      CHECK(correlation_from_rates(r) ==
            doctest::Approx(reference).epsilon(1e-12));
      // Detected rates do scale with the efficiencies.
      CHECK(r.detected()[0] ==
            doctest::Approx(eta1 * eta2 * r.plus_plus));
    }
  }
}
