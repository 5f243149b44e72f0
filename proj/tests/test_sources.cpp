#include "ppcorr/sources.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace ppcorr;

namespace {
const std::vector<double> kNbarGrid = {0.0, 0.1, 0.22, 0.29, 0.5,
                                       1.0, 2.0,  3.7,  10.0};
}

TEST_CASE("single photon emitter saturates at one photon") {
  const SourceModel s = make_single_photon();
  CHECK(moment(s, 1) == 1.0);
  CHECK(moment(s, 2) == 0.0);
  CHECK(net_photon_number(s) == 1.0);
}

TEST_CASE("coherent and thermal moments") {
  CHECK(moment(make_coherent(0.5), 1) == doctest::Approx(0.5));
  CHECK(moment(make_coherent(0.5), 2) == doctest::Approx(0.25));
  CHECK(moment(make_thermal(0.5), 1) == doctest::Approx(0.5));
  // Thermal bunching doubles the two-photon rate: 2 nbar^2.
  CHECK(moment(make_thermal(0.5), 2) == doctest::Approx(0.5));
  CHECK(moment(make_thermal(1.0), 2) == doctest::Approx(2.0));
}

TEST_CASE("photon-added moments") {
  // (nbar^2 + 3 nbar + 1) / (1 + nbar) at nbar = 1.
  CHECK(moment(make_pacs(1.0), 1) == doctest::Approx(2.5));
  CHECK(moment(make_pacs(1.0), 2) == doctest::Approx(5.0));
  CHECK(moment(make_pats(0.5), 1) == doctest::Approx(2.0));
  CHECK(moment(make_pats(0.5), 2) == doctest::Approx(3.5));
  // Photon addition to vacuum gives exactly one photon, never two.
  CHECK(moment(make_pacs(0.0), 1) == doctest::Approx(1.0));
  CHECK(moment(make_pacs(0.0), 2) == doctest::Approx(0.0));
  CHECK(moment(make_pats(0.0), 1) == doctest::Approx(1.0));
  CHECK(moment(make_pats(0.0), 2) == doctest::Approx(0.0));
}

TEST_CASE("net photon number of photon-added kinds stays >= 1") {
  for (double nbar : kNbarGrid) {
    CHECK(net_photon_number(make_pacs(nbar)) >= 1.0);
    CHECK(net_photon_number(make_pats(nbar)) >= 1.0);
    CHECK(net_photon_number(make_pats(nbar)) ==
          doctest::Approx(2.0 * nbar + 1.0));
  }
}

TEST_CASE("net photon number inversion round trips") {
  const std::vector<SourceKind> kinds = {SourceKind::Coherent,
                                         SourceKind::Thermal,
                                         SourceKind::Pacs, SourceKind::Pats};
  for (SourceKind kind : kinds) {
    for (double nbar : kNbarGrid) {
      const double net = net_photon_number({kind, nbar});
      CHECK(nbar_from_net(kind, net) == doctest::Approx(nbar).epsilon(1e-12));
    }
  }
  CHECK(nbar_from_net(SourceKind::Pacs, 2.5) == doctest::Approx(1.0));
  CHECK(nbar_from_net(SourceKind::Pats, 1.0) == 0.0);
  CHECK(nbar_from_net(SourceKind::Pats, 2.0) == doctest::Approx(0.5));
  CHECK(nbar_from_net(SourceKind::Coherent, 0.7) == doctest::Approx(0.7));
}

TEST_CASE("moments are nonnegative across the grid") {
  const std::vector<SourceKind> kinds = {
      SourceKind::SinglePhoton, SourceKind::Coherent, SourceKind::Thermal,
      SourceKind::Pacs, SourceKind::Pats};
  for (SourceKind kind : kinds) {
    for (double nbar : kNbarGrid) {
      for (int k = 1; k <= 2; ++k) {
        CHECK(moment({kind, nbar}, k) >= 0.0);
      }
    }
  }
}

TEST_CASE("first moment equals the net photon number") {
  const std::vector<SourceKind> kinds = {
      SourceKind::SinglePhoton, SourceKind::Coherent, SourceKind::Thermal,
      SourceKind::Pacs, SourceKind::Pats};
  for (SourceKind kind : kinds) {
    for (double nbar : kNbarGrid) {
      const SourceModel s{kind, nbar};
      CHECK(moment(s, 1) == net_photon_number(s));
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS((void)moment(make_coherent(1.0), 3), std::invalid_argument);
  CHECK_THROWS_AS((void)moment(make_coherent(1.0), 0), std::invalid_argument);
  CHECK_THROWS_AS((void)moment({SourceKind::Thermal, -0.1}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)make_coherent(-1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)nbar_from_net(SourceKind::Pacs, 0.99),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)nbar_from_net(SourceKind::Pats, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)nbar_from_net(SourceKind::Coherent, -0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)nbar_from_net(SourceKind::SinglePhoton, 1.0),
                  std::invalid_argument);
}
