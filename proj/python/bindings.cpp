#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ppcorr/bell.hpp"
#include "ppcorr/correlations.hpp"
#include "ppcorr/fock_oracle.hpp"
#include "ppcorr/nonclassicality.hpp"
#include "ppcorr/verify.hpp"
#include "ppcorr/version.hpp"

namespace py = pybind11;
using namespace ppcorr;

namespace {

// Python-facing constructors take the pairing by label so scripts read like
// the CLI: make_pair("T", nbar=0.5).
PairConfig make_pair(const std::string& label, std::optional<double> nbar,
                     std::optional<double> net, std::optional<double> nbar_a,
                     std::optional<double> nbar_b) {
  const Pairing pairing = pairing_from_string(label);
  if (pairing == Pairing::QQ) return make_two_emitters();
  if (nbar_a || nbar_b) {
    if (pairing != Pairing::Class || !nbar_a || !nbar_b) {
      throw std::invalid_argument(
          "nbar_a/nbar_b apply only to the Class pairing, together");
    }
    return make_classical(*nbar_a, *nbar_b);
  }
  if (nbar && net) {
    throw std::invalid_argument("pass either nbar or net, not both");
  }
  if (nbar) return pair_from_nbar(pairing, *nbar);
  if (net) return pair_from_net(pairing, *net);
  throw std::invalid_argument("pairing " + label + " needs nbar or net");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Photon-photon correlations of disparate source pairings: closed "
      "forms plus a truncated Fock-space cross-check";
  m.attr("__version__") = kVersion;

  py::register_exception<TruncationError>(m, "TruncationError");

  py::enum_<SourceKind>(m, "SourceKind")
      .value("SinglePhoton", SourceKind::SinglePhoton)
      .value("Coherent", SourceKind::Coherent)
      .value("Thermal", SourceKind::Thermal)
      .value("Pacs", SourceKind::Pacs)
      .value("Pats", SourceKind::Pats);

  py::enum_<Pairing>(m, "Pairing")
      .value("Class", Pairing::Class)
      .value("C", Pairing::C)
      .value("T", Pairing::T)
      .value("PC", Pairing::PC)
      .value("PT", Pairing::PT)
      .value("QQ", Pairing::QQ);

  py::class_<SourceModel>(m, "SourceModel")
      .def_readonly("kind", &SourceModel::kind)
      .def_readonly("nbar", &SourceModel::nbar)
      .def("__repr__", [](const SourceModel& s) {
        return "SourceModel(" + std::string(to_string(s.kind)) +
               ", nbar=" + std::to_string(s.nbar) + ")";
      });

  py::class_<PairConfig>(m, "PairConfig")
      .def_readonly("pairing", &PairConfig::pairing)
      .def_readonly("source_a", &PairConfig::source_a)
      .def_readonly("source_b", &PairConfig::source_b)
      .def("__repr__", [](const PairConfig& p) {
        return "PairConfig(" + std::string(to_string(p.pairing)) + ")";
      });

  m.def("make_pair", &make_pair, py::arg("pairing"),
        py::arg("nbar") = std::nullopt, py::arg("net") = std::nullopt,
        py::arg("nbar_a") = std::nullopt, py::arg("nbar_b") = std::nullopt,
        "Build a pairing configuration from a label and a photon number");

  m.def("moment", &moment, py::arg("source"), py::arg("k"),
        "Normally ordered moment <a^dag^k a^k> for k in {1, 2}");
  m.def("net_photon_number", &net_photon_number, py::arg("source"));
  m.def("nbar_from_net", &nbar_from_net, py::arg("kind"), py::arg("net"));

  m.def("g2", &g2, py::arg("pair"), py::arg("phi1"), py::arg("phi2"),
        "Spatial second-order correlation G2(phi1, phi2)");
  m.def("visibility", &visibility, py::arg("pair"),
        "Fringe visibility of the G2 interference pattern");
  m.def("nbar_from_visibility", &nbar_from_visibility, py::arg("pairing"),
        py::arg("value"), "Inverse of the visibility curve (C and T only)");

  py::class_<SchwarzValue>(m, "SchwarzValue")
      .def_readonly("value", &SchwarzValue::value)
      .def_readonly("infinite", &SchwarzValue::infinite);

  py::class_<SchwarzMax>(m, "SchwarzMax")
      .def_readonly("s", &SchwarzMax::s)
      .def_readonly("dphi_star", &SchwarzMax::dphi_star);

  py::class_<WitnessReport>(m, "WitnessReport")
      .def_readonly("pairing", &WitnessReport::pairing)
      .def_readonly("nbar", &WitnessReport::nbar)
      .def_readonly("net", &WitnessReport::net)
      .def_readonly("diagonal", &WitnessReport::diagonal)
      .def_readonly("off_peak", &WitnessReport::off_peak)
      .def_readonly("determinant_min", &WitnessReport::determinant_min)
      .def_readonly("s_max", &WitnessReport::s_max)
      .def_readonly("violated", &WitnessReport::violated)
      .def_readonly("boundary", &WitnessReport::boundary);

  m.def("variance_corr", &variance_corr, py::arg("pair"), py::arg("phi_k"),
        py::arg("phi_l"),
        "Intensity-variance correlation entering the Cauchy-Schwarz "
        "determinant");
  m.def("cs_determinant", &cs_determinant, py::arg("pair"), py::arg("phi1"),
        py::arg("phi2"));
  m.def("schwarz_ratio", &schwarz_ratio, py::arg("pair"), py::arg("phi1"),
        py::arg("phi2"));
  m.def("schwarz_max", &schwarz_max, py::arg("pair"));
  m.def("witness_report", &witness_report, py::arg("pair"));
  m.def(
      "naive_normalized_cs",
      [](const PairConfig& pair, double phi1, double phi2) {
        const NaiveCs result = naive_normalized_cs(pair, phi1, phi2);
        return py::make_tuple(result.lhs, result.rhs);
      },
      py::arg("pair"), py::arg("phi1"), py::arg("phi2"),
      "Both sides (lhs, rhs) of the mean-intensity-normalized CS "
      "inequality, which never signals a violation");

  py::class_<ChshReport>(m, "ChshReport")
      .def_readonly("pairing", &ChshReport::pairing)
      .def_readonly("visibility", &ChshReport::visibility)
      .def_readonly("chsh_value", &ChshReport::chsh_value)
      .def_readonly("violated", &ChshReport::violated);

  m.def("normalized_g2", &normalized_g2, py::arg("pair"), py::arg("phi1"),
        py::arg("phi2"), "Normalized correlator V cos(phi2 - phi1)");
  m.def(
      "chsh",
      [](const PairConfig& pair, const std::vector<double>& angles) {
        if (angles.size() != 4) {
          throw std::invalid_argument("chsh needs exactly four angles");
        }
        return chsh(pair, ChshAngles{angles[0], angles[1], angles[2],
                                     angles[3]});
      },
      py::arg("pair"), py::arg("angles"));
  m.def("chsh_max", &chsh_max, py::arg("pair"),
        "CHSH at the optimal angle set: 2 sqrt(2) times the visibility");
  m.def("bell_threshold", &bell_threshold, py::arg("pairing"),
        "Net photon number below which CHSH exceeds 2");

  m.def(
      "g2_numeric",
      [](const PairConfig& pair, double phi1, double phi2,
         std::optional<int> truncation, double tail_tol) {
        int n = 1;
        if (truncation) {
          n = *truncation;
        } else if (pair.pairing == Pairing::Class) {
          n = std::max(choose_truncation(pair.source_a, tail_tol),
                       choose_truncation(pair.source_b, tail_tol));
        } else if (pair.pairing != Pairing::QQ) {
          n = choose_truncation(pair.source_b, tail_tol);
        }
        return g2_numeric(pair, phi1, phi2, n, tail_tol);
      },
      py::arg("pair"), py::arg("phi1"), py::arg("phi2"),
      py::arg("truncation") = std::nullopt,
      py::arg("tail_tol") = kDefaultTailTol,
      "G2 from the truncated Fock-space engine; truncation is chosen "
      "automatically when omitted");
  m.def("moment_numeric", &moment_numeric, py::arg("source"), py::arg("k"),
        py::arg("truncation"), py::arg("tail_tol") = kDefaultTailTol);
  m.def("choose_truncation", &choose_truncation, py::arg("source"),
        py::arg("tail_tol") = kDefaultTailTol);

  m.def(
      "verify",
      [](std::vector<std::string> pair_labels, std::vector<double> nbars,
         int dphi_count, double tol, double tail_tol) {
        VerifyOptions options;
        for (const std::string& label : pair_labels) {
          options.pairings.push_back(pairing_from_string(label));
        }
        options.nbars = std::move(nbars);
        options.dphi_count = dphi_count;
        options.tol = tol;
        options.tail_tol = tail_tol;
        const VerifyResult result = run_verification(options);
        py::dict summary;
        summary["g2_cases"] = result.g2_cases.size();
        summary["moment_cases"] = result.moment_cases.size();
        summary["max_deviation"] = result.max_deviation;
        summary["ok"] = result.ok;
        return summary;
      },
      py::arg("pairings") = std::vector<std::string>{},
      py::arg("nbars") = std::vector<double>{},
      py::arg("dphi_count") = 16, py::arg("tol") = 1e-9,
      py::arg("tail_tol") = kDefaultTailTol,
      "Cross-check the closed forms against the Fock engine; returns a "
      "summary dict");
}
