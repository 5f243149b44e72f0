#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ppcorr/bell.hpp"
#include "ppcorr/correlations.hpp"
#include "ppcorr/fock_oracle.hpp"
#include "ppcorr/nonclassicality.hpp"
#include "ppcorr/report.hpp"
#include "ppcorr/verify.hpp"
#include "ppcorr/version.hpp"

namespace {

using namespace ppcorr;

constexpr double kPi = std::numbers::pi;
constexpr double kRoot2 = std::numbers::sqrt2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOpts {
  std::string format = "csv";
  std::string out;  // empty = stdout
};

void add_output_opts(CLI::App* cmd, OutputOpts& opts) {
  cmd->add_option("--format", opts.format, "Table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out,
                  "Write the table to this path instead of stdout");
}

void emit_table(const SweepTable& table, const ReportMeta& meta,
                const OutputOpts& opts) {
  std::ostringstream buffer;
  if (opts.format == "json") {
    write_json(buffer, table, meta);
  } else {
    write_csv(buffer, table);
  }
  if (opts.out.empty()) {
    std::cout << buffer.str();
    if (!std::cout) throw IoError("failed to write to stdout");
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw IoError("cannot open output path: " + opts.out);
  file << buffer.str();
  file.flush();
  if (!file) throw IoError("failed to write output path: " + opts.out);
}

struct PairOpts {
  std::string label;
  std::optional<double> nbar;
  std::optional<double> net;
  std::optional<double> nbar_a;
  std::optional<double> nbar_b;
};

void add_pair_opts(CLI::App* cmd, PairOpts& opts) {
  cmd->add_option("--pair", opts.label,
                  "Source pairing: Class, C, T, PC, PT or QQ")
      ->required();
  auto* nbar = cmd->add_option("--nbar", opts.nbar,
                               "Seed nbar of source B (both modes for Class)");
  auto* net = cmd->add_option("--net", opts.net,
                              "Net photon number of source B instead of nbar");
  auto* a = cmd->add_option("--nbar-a", opts.nbar_a,
                            "Class only: nbar of mode A");
  auto* b = cmd->add_option("--nbar-b", opts.nbar_b,
                            "Class only: nbar of mode B");
  nbar->excludes(net);
  a->excludes(nbar)->excludes(net)->needs(b);
  b->needs(a);
}

PairConfig resolve_pair(const PairOpts& opts) {
  const Pairing pairing = pairing_from_string(opts.label);
  if (pairing == Pairing::QQ) return make_two_emitters();
  if (opts.nbar_a || opts.nbar_b) {
    if (pairing != Pairing::Class) {
      throw std::invalid_argument(
          "--nbar-a/--nbar-b apply only to the Class pairing");
    }
    return make_classical(*opts.nbar_a, *opts.nbar_b);
  }
  if (opts.nbar) return pair_from_nbar(pairing, *opts.nbar);
  if (opts.net) return pair_from_net(pairing, *opts.net);
  throw std::invalid_argument("pairing " + opts.label +
                              " needs --nbar or --net");
}

void append_pair_meta(ReportMeta& meta, const PairOpts& opts) {
  meta.parameters.emplace_back("pair", opts.label);
  if (opts.nbar) meta.parameters.emplace_back("nbar", format_sig12(*opts.nbar));
  if (opts.net) meta.parameters.emplace_back("net", format_sig12(*opts.net));
  if (opts.nbar_a) {
    meta.parameters.emplace_back("nbar_a", format_sig12(*opts.nbar_a));
  }
  if (opts.nbar_b) {
    meta.parameters.emplace_back("nbar_b", format_sig12(*opts.nbar_b));
  }
}

struct SweepOpts {
  std::string param;  // nbar | net | dphi (per command)
  std::optional<double> start;
  std::optional<double> stop;
  int count = 101;
};

void add_sweep_opts(CLI::App* cmd, SweepOpts& opts,
                    const std::string& params) {
  cmd->add_option("--sweep", opts.param, "Sweep parameter: " + params);
  cmd->add_option("--start", opts.start, "Sweep range start");
  cmd->add_option("--stop", opts.stop, "Sweep range stop");
  cmd->add_option("--count", opts.count, "Sweep sample count")
      ->capture_default_str();
}

std::vector<double> sweep_grid(const SweepOpts& opts, double fallback_start,
                               double fallback_stop) {
  const double start = opts.start.value_or(fallback_start);
  const double stop = opts.stop.value_or(fallback_stop);
  if (opts.count < 2) throw std::invalid_argument("--count must be >= 2");
  if (!(start < stop)) {
    throw std::invalid_argument("--start must be below --stop");
  }
  std::vector<double> grid(opts.count);
  for (int i = 0; i < opts.count; ++i) {
    grid[i] = start + (stop - start) * i / (opts.count - 1);
  }
  return grid;
}

void append_sweep_meta(ReportMeta& meta, const SweepOpts& opts,
                       const std::vector<double>& grid) {
  meta.parameters.emplace_back("sweep", opts.param);
  meta.parameters.emplace_back("start", format_sig12(grid.front()));
  meta.parameters.emplace_back("stop", format_sig12(grid.back()));
  meta.parameters.emplace_back("count", std::to_string(grid.size()));
}

PairConfig pair_at(Pairing pairing, const std::string& param, double value) {
  return param == "net" ? pair_from_net(pairing, value)
                        : pair_from_nbar(pairing, value);
}

double pair_nbar(const PairConfig& pair) { return pair.source_b.nbar; }

double pair_net(const PairConfig& pair) {
  return pair.pairing == Pairing::QQ ? 1.0
                                     : net_photon_number(pair.source_b);
}

// ---------------------------------------------------------------- visibility

struct VisibilityCmd {
  PairOpts pair;
  SweepOpts sweep;
  OutputOpts output;

  int run() const {
    SweepTable table;
    table.columns = {{"pairing"}, {"nbar"}, {"net"}, {"visibility"}};
    ReportMeta meta{"visibility", {}};
    append_pair_meta(meta, pair);
    auto add_row = [&](const PairConfig& config) {
      table.add_row({Cell::txt(to_string(config.pairing)),
                     Cell::num(pair_nbar(config)),
                     Cell::num(pair_net(config)),
                     Cell::num(visibility(config))});
    };
    if (sweep.param.empty()) {
      add_row(resolve_pair(pair));
    } else if (sweep.param == "nbar" || sweep.param == "net") {
      const Pairing pairing = pairing_from_string(pair.label);
      const std::vector<double> grid =
          sweep_grid(sweep, sweep.param == "net" ? 1.0 : 0.0, 10.0);
      append_sweep_meta(meta, sweep, grid);
      for (double value : grid) add_row(pair_at(pairing, sweep.param, value));
    } else {
      throw std::invalid_argument("visibility sweeps over nbar or net");
    }
    emit_table(table, meta, output);
    return 0;
  }
};

// ------------------------------------------------------------------------ g2

struct G2Cmd {
  PairOpts pair;
  SweepOpts sweep;
  OutputOpts output;
  std::optional<double> dphi;
  std::optional<double> phi1;
  std::optional<double> phi2;
  std::optional<double> wavelength;
  std::optional<double> separation;
  std::optional<double> xi1;
  std::optional<double> xi2;

  double resolve_dphi() const {
    if (wavelength || separation || xi1 || xi2) {
      if (!(wavelength && separation && xi1 && xi2)) {
        throw std::invalid_argument(
            "geometry needs all of --wavelength --separation --xi1 --xi2");
      }
      const DetectorGeometry geometry{*wavelength, *separation};
      return phase_from_geometry(geometry, *xi2) -
             phase_from_geometry(geometry, *xi1);
    }
    if (phi1 || phi2) {
      return phi2.value_or(0.0) - phi1.value_or(0.0);
    }
    return dphi.value_or(0.0);
  }

  int run() const {
    SweepTable table;
    table.columns = {{"pairing"}, {"nbar"}, {"net"}, {"dphi"}, {"g2"}};
    ReportMeta meta{"g2", {}};
    append_pair_meta(meta, pair);
    const PairConfig config = resolve_pair(pair);
    auto add_row = [&](double delta) {
      table.add_row({Cell::txt(to_string(config.pairing)),
                     Cell::num(pair_nbar(config)), Cell::num(pair_net(config)),
                     Cell::num(delta), Cell::num(g2(config, 0.0, delta))});
    };
    if (sweep.param.empty()) {
      const double delta = resolve_dphi();
      meta.parameters.emplace_back("dphi", format_sig12(delta));
      add_row(delta);
    } else if (sweep.param == "dphi") {
      const std::vector<double> grid = sweep_grid(sweep, 0.0, 2.0 * kPi);
      append_sweep_meta(meta, sweep, grid);
      for (double delta : grid) add_row(delta);
    } else {
      throw std::invalid_argument("g2 sweeps over dphi");
    }
    emit_table(table, meta, output);
    return 0;
  }
};

// -------------------------------------------------------------------- schwarz

void add_witness_row(SweepTable& table, const PairConfig& config) {
  const WitnessReport report = witness_report(config);
  table.add_row({Cell::txt(to_string(report.pairing)), Cell::num(report.nbar),
                 Cell::num(report.net), Cell::num(report.diagonal),
                 Cell::num(report.off_peak), Cell::num(report.determinant_min),
                 report.s_max.s.infinite ? Cell::inf()
                                         : Cell::num(report.s_max.s.value),
                 Cell::num(report.s_max.dphi_star),
                 Cell::boolean(report.violated),
                 Cell::boolean(report.boundary)});
}

struct SchwarzCmd {
  PairOpts pair;
  SweepOpts sweep;
  OutputOpts output;

  int run() const {
    SweepTable table;
    table.columns = {{"pairing"},      {"nbar"},
                     {"net"},          {"diagonal"},
                     {"off_peak"},     {"determinant_min"},
                     {"s_max", true},  {"dphi_star"},
                     {"violated"},     {"boundary"}};
    ReportMeta meta{"schwarz", {}};
    append_pair_meta(meta, pair);
    if (sweep.param.empty()) {
      add_witness_row(table, resolve_pair(pair));
    } else if (sweep.param == "nbar" || sweep.param == "net") {
      const Pairing pairing = pairing_from_string(pair.label);
      const std::vector<double> grid =
          sweep_grid(sweep, sweep.param == "net" ? 1.0 : 0.0, 10.0);
      append_sweep_meta(meta, sweep, grid);
      for (double value : grid) {
        add_witness_row(table, pair_at(pairing, sweep.param, value));
      }
    } else {
      throw std::invalid_argument("schwarz sweeps over nbar or net");
    }
    emit_table(table, meta, output);
    return 0;
  }
};

// ----------------------------------------------------------------------- bell

struct BellCmd {
  PairOpts pair;
  SweepOpts sweep;
  OutputOpts output;
  std::vector<double> angles;
  bool rates = false;
  double rate_dphi = 0.0;
  double eta1 = 1.0;
  double eta2 = 1.0;

  static const char* verdict(const ChshReport& report) {
    if (std::abs(report.chsh_value - 2.0) <= 1e-3) return "boundary";
    return report.violated ? "violated" : "not violated";
  }

  ChshReport evaluate(const PairConfig& config) const {
    if (angles.empty()) return chsh_max(config);
    if (angles.size() != 4) {
      throw std::invalid_argument(
          "--angles needs exactly four values: phi1 phi1' phi2 phi2'");
    }
    return chsh(config, ChshAngles{angles[0], angles[1], angles[2],
                                   angles[3]});
  }

  int run_rates(ReportMeta meta) const {
    const PairConfig config = resolve_pair(pair);
    const FourChannelRates r =
        double_channel_rates(config, 0.0, rate_dphi, eta1, eta2);
    const auto detected = r.detected();
    meta.parameters.emplace_back("dphi", format_sig12(rate_dphi));
    meta.parameters.emplace_back("eta1", format_sig12(eta1));
    meta.parameters.emplace_back("eta2", format_sig12(eta2));
    SweepTable table;
    table.columns = {{"pairing"}, {"nbar"}, {"net"},  {"dphi"},
                     {"g_pp"},    {"g_pm"}, {"g_mp"}, {"g_mm"},
                     {"eta1"},    {"eta2"}, {"correlation"}};
    table.add_row({Cell::txt(to_string(config.pairing)),
                   Cell::num(pair_nbar(config)), Cell::num(pair_net(config)),
                   Cell::num(rate_dphi), Cell::num(detected[0]),
                   Cell::num(detected[1]), Cell::num(detected[2]),
                   Cell::num(detected[3]), Cell::num(eta1), Cell::num(eta2),
                   Cell::num(correlation_from_rates(r))});
    emit_table(table, meta, output);
    return 0;
  }

  int run() const {
    ReportMeta meta{"bell", {}};
    append_pair_meta(meta, pair);
    if (rates) return run_rates(std::move(meta));
    SweepTable table;
    table.columns = {{"pairing"}, {"nbar"},          {"net"},
                     {"visibility"}, {"chsh"},       {"threshold_net"},
                     {"verdict"}, {"violated"}};
    auto add_row = [&](const PairConfig& config) {
      const ChshReport report = evaluate(config);
      Cell threshold = Cell::txt("");
      if (config.pairing != Pairing::Class &&
          config.pairing != Pairing::QQ) {
        threshold = Cell::num(bell_threshold(config.pairing));
      }
      table.add_row({Cell::txt(to_string(report.pairing)),
                     Cell::num(pair_nbar(config)),
                     Cell::num(pair_net(config)),
                     Cell::num(report.visibility),
                     Cell::num(report.chsh_value), threshold,
                     Cell::txt(verdict(report)),
                     Cell::boolean(report.violated)});
    };
    if (!angles.empty()) {
      std::string joined;
      for (double a : angles) {
        if (!joined.empty()) joined += ' ';
        joined += format_sig12(a);
      }
      meta.parameters.emplace_back("angles", joined);
    }
    if (sweep.param.empty()) {
      add_row(resolve_pair(pair));
    } else if (sweep.param == "nbar" || sweep.param == "net") {
      const Pairing pairing = pairing_from_string(pair.label);
      const std::vector<double> grid =
          sweep_grid(sweep, sweep.param == "net" ? 1.0 : 0.0, 10.0);
      append_sweep_meta(meta, sweep, grid);
      for (double value : grid) add_row(pair_at(pairing, sweep.param, value));
    } else {
      throw std::invalid_argument("bell sweeps over nbar or net");
    }
    emit_table(table, meta, output);
    return 0;
  }
};

// ----------------------------------------------------------------------- figs

struct Fig2Cmd {
  OutputOpts output;
  double net_min = 1.0;
  double net_max = 10.0;
  int points = 181;

  int run() const {
    if (points < 2) throw std::invalid_argument("--points must be >= 2");
    if (!(net_min >= 1.0) || !(net_min < net_max)) {
      throw std::invalid_argument(
          "need 1 <= net-min < net-max (photon-added sources emit at least "
          "one photon)");
    }
    SweepTable table;
    table.columns = {{"net"},  {"V_Class"}, {"V_C"},  {"V_T"},
                     {"V_PC"}, {"V_PT"},    {"V_QQ"}, {"bell_bound"}};
    for (int i = 0; i < points; ++i) {
      const double net = net_min + (net_max - net_min) * i / (points - 1);
      table.add_row({Cell::num(net),
                     Cell::num(visibility(make_classical(net, net))),
                     Cell::num(visibility(pair_from_net(Pairing::C, net))),
                     Cell::num(visibility(pair_from_net(Pairing::T, net))),
                     Cell::num(visibility(pair_from_net(Pairing::PC, net))),
                     Cell::num(visibility(pair_from_net(Pairing::PT, net))),
                     Cell::num(1.0), Cell::num(1.0 / kRoot2)});
    }
    ReportMeta meta{"fig2",
                    {{"net_min", format_sig12(net_min)},
                     {"net_max", format_sig12(net_max)},
                     {"points", std::to_string(points)}}};
    emit_table(table, meta, output);
    return 0;
  }
};

// Inversions of the visibility curves used by fig3. The library exposes the
// closed-form inverses for C and T; the remaining pairings are handled here
// because only the figure needs them.
double nbar_for_visibility(Pairing pairing, double v) {
  switch (pairing) {
    case Pairing::C:
    case Pairing::T:
      return nbar_from_visibility(pairing, v);
    case Pairing::PT: {
      // 4 net / (3 net^2 + 2 net - 1) = v, positive root in net.
      const double net =
          ((4.0 - 2.0 * v) +
           std::sqrt((2.0 * v - 4.0) * (2.0 * v - 4.0) + 12.0 * v * v)) /
          (6.0 * v);
      return nbar_from_net(SourceKind::Pats, net);
    }
    case Pairing::PC: {
      if (v >= 1.0) return 0.0;
      double lo = 0.0, hi = 4.0;
      while (visibility(make_mixed(SourceKind::Pacs, hi)) > v) hi *= 2.0;
      for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (visibility(make_mixed(SourceKind::Pacs, mid)) >= v ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    case Pairing::Class: {
      // v = 2 r / (1 + r)^2 with r the mode ratio; take the r <= 1 root.
      const double disc = 1.0 - 2.0 * v;
      if (disc < 0.0) {
        throw std::invalid_argument("Class visibility never exceeds 1/2");
      }
      return (1.0 - v - std::sqrt(disc)) / v;
    }
    case Pairing::QQ:
      throw std::invalid_argument("QQ visibility is fixed at 1");
  }
  throw std::logic_error("unhandled pairing");
}

struct Fig3Cmd {
  OutputOpts output;

  int run() const {
    SweepTable table;
    table.columns = {{"pairing"},     {"nbar"},  {"net"},      {"visibility"},
                     {"s_max", true}, {"dphi_star"}, {"violated"}};
    const std::vector<Pairing> pairings = {Pairing::Class, Pairing::C,
                                           Pairing::T, Pairing::PC,
                                           Pairing::PT};
    for (Pairing pairing : pairings) {
      // Visibility grid in exact thousandths, plus each pairing's special
      // points (thresholds and divergences) pinned exactly.
      std::vector<double> grid;
      const int top = pairing == Pairing::Class ? 500 : 1000;
      for (int milli = 50; milli <= top; milli += 5) {
        grid.push_back(milli / 1000.0);
      }
      if (pairing == Pairing::C) grid.push_back(0.8);
      if (pairing == Pairing::T) grid.push_back(1.0 / kRoot2);
      std::sort(grid.begin(), grid.end());
      grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
      for (double v : grid) {
        const double nbar = nbar_for_visibility(pairing, v);
        const PairConfig config = pairing == Pairing::Class
                                      ? make_classical(1.0, nbar)
                                      : pair_from_nbar(pairing, nbar);
        const WitnessReport report = witness_report(config);
        table.add_row({Cell::txt(to_string(pairing)), Cell::num(nbar),
                       Cell::num(pair_net(config)),
                       Cell::num(visibility(config)),
                       report.s_max.s.infinite
                           ? Cell::inf()
                           : Cell::num(report.s_max.s.value),
                       Cell::num(report.s_max.dphi_star),
                       Cell::boolean(report.violated)});
      }
    }
    ReportMeta meta{"fig3", {{"v_step", "0.005"}}};
    emit_table(table, meta, output);
    return 0;
  }
};

// --------------------------------------------------------------------- verify

struct VerifyCmd {
  std::vector<std::string> pair_labels;
  std::vector<double> nbars;
  int dphi_count = 16;
  double tol = 1e-9;
  double tail_tol = kDefaultTailTol;
  std::optional<int> truncation;
  OutputOpts output;
  bool table_requested = false;

  int run() const {
    VerifyOptions options;
    for (const std::string& label : pair_labels) {
      options.pairings.push_back(pairing_from_string(label));
    }
    options.nbars = nbars;
    options.dphi_count = dphi_count;
    options.tol = tol;
    options.tail_tol = tail_tol;
    options.truncation = truncation;
    const VerifyResult result = run_verification(options);

    if (table_requested) {
      SweepTable table;
      table.columns = {{"check"},    {"label"},      {"nbar"},
                       {"dphi"},     {"k"},          {"truncation"},
                       {"analytic"}, {"numeric"},    {"deviation"}};
      for (const VerifyCase& c : result.g2_cases) {
        table.add_row({Cell::txt("g2"), Cell::txt(to_string(c.pairing)),
                       Cell::num(c.nbar), Cell::num(c.dphi), Cell::txt(""),
                       Cell::num(c.truncation), Cell::num(c.analytic),
                       Cell::num(c.numeric), Cell::num(c.deviation)});
      }
      for (const MomentCase& c : result.moment_cases) {
        table.add_row({Cell::txt("moment"), Cell::txt(to_string(c.kind)),
                       Cell::num(c.nbar), Cell::txt(""), Cell::num(c.k),
                       Cell::num(c.truncation), Cell::num(c.analytic),
                       Cell::num(c.numeric), Cell::num(c.deviation)});
      }
      ReportMeta meta{"verify",
                      {{"tol", format_sig12(tol)},
                       {"tail_tol", format_sig12(tail_tol)},
                       {"dphi_count", std::to_string(dphi_count)}}};
      emit_table(table, meta, output);
    }

    std::cerr << "g2 cases: " << result.g2_cases.size()
              << ", moment cases: " << result.moment_cases.size()
              << ", max relative deviation: "
              << format_sig12(result.max_deviation) << "\n";
    if (!result.ok) {
      int shown = 0;
      for (const VerifyCase& c : result.g2_cases) {
        if (c.deviation > tol && shown < 10) {
          std::cerr << "  mismatch: pairing " << to_string(c.pairing)
                    << " nbar " << format_sig12(c.nbar) << " dphi "
                    << format_sig12(c.dphi) << " analytic "
                    << format_sig12(c.analytic) << " numeric "
                    << format_sig12(c.numeric) << "\n";
          ++shown;
        }
      }
      for (const MomentCase& c : result.moment_cases) {
        if (c.deviation > tol && shown < 10) {
          std::cerr << "  mismatch: moment " << to_string(c.kind) << " nbar "
                    << format_sig12(c.nbar) << " k " << c.k << " analytic "
                    << format_sig12(c.analytic) << " numeric "
                    << format_sig12(c.numeric) << "\n";
          ++shown;
        }
      }
      std::cerr << "verify: FAIL (tol " << format_sig12(tol) << ")\n";
      return 1;
    }
    std::cerr << "verify: OK (tol " << format_sig12(tol) << ")\n";
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Photon-photon correlations of mixed disparate sources: closed forms "
      "with a truncated Fock-space cross-check"};
  app.set_version_flag("--version", ppcorr::kVersion);
  app.require_subcommand(1);

  VisibilityCmd visibility_cmd;
  auto* visibility_app = app.add_subcommand(
      "visibility", "Interference visibility of the G2 fringe");
  add_pair_opts(visibility_app, visibility_cmd.pair);
  add_sweep_opts(visibility_app, visibility_cmd.sweep, "nbar, net");
  add_output_opts(visibility_app, visibility_cmd.output);

  G2Cmd g2_cmd;
  auto* g2_app = app.add_subcommand(
      "g2", "Spatial second-order correlation G2(phi1, phi2)");
  add_pair_opts(g2_app, g2_cmd.pair);
  g2_app->add_option("--dphi", g2_cmd.dphi, "Detector phase difference");
  g2_app->add_option("--phi1", g2_cmd.phi1, "Phase at detector 1");
  g2_app->add_option("--phi2", g2_cmd.phi2, "Phase at detector 2");
  g2_app->add_option("--wavelength", g2_cmd.wavelength,
                     "Geometry: light wavelength");
  g2_app->add_option("--separation", g2_cmd.separation,
                     "Geometry: source separation");
  g2_app->add_option("--xi1", g2_cmd.xi1, "Geometry: detector 1 angle");
  g2_app->add_option("--xi2", g2_cmd.xi2, "Geometry: detector 2 angle");
  add_sweep_opts(g2_app, g2_cmd.sweep, "dphi");
  add_output_opts(g2_app, g2_cmd.output);

  SchwarzCmd schwarz_cmd;
  auto* schwarz_app = app.add_subcommand(
      "schwarz", "Cauchy-Schwarz witness: determinant, ratio and verdict");
  add_pair_opts(schwarz_app, schwarz_cmd.pair);
  add_sweep_opts(schwarz_app, schwarz_cmd.sweep, "nbar, net");
  add_output_opts(schwarz_app, schwarz_cmd.output);

  BellCmd bell_cmd;
  auto* bell_app = app.add_subcommand(
      "bell", "CHSH evaluation, thresholds and double-channel rates");
  add_pair_opts(bell_app, bell_cmd.pair);
  bell_app
      ->add_option("--angles", bell_cmd.angles,
                   "Four detector phases phi1 phi1' phi2 phi2' "
                   "(default: optimal set)")
      ->expected(4);
  bell_app->add_flag("--rates", bell_cmd.rates,
                     "Print the four double-channel coincidence rates");
  bell_app->add_option("--dphi", bell_cmd.rate_dphi,
                       "Phase difference for --rates");
  bell_app->add_option("--eta1", bell_cmd.eta1, "Detector 1 efficiency")
      ->capture_default_str();
  bell_app->add_option("--eta2", bell_cmd.eta2, "Detector 2 efficiency")
      ->capture_default_str();
  add_sweep_opts(bell_app, bell_cmd.sweep, "nbar, net");
  add_output_opts(bell_app, bell_cmd.output);

  Fig2Cmd fig2_cmd;
  auto* fig2_app = app.add_subcommand(
      "fig2", "Visibility vs net photon number for every pairing");
  fig2_app->add_option("--net-min", fig2_cmd.net_min, "Grid start")
      ->capture_default_str();
  fig2_app->add_option("--net-max", fig2_cmd.net_max, "Grid stop")
      ->capture_default_str();
  fig2_app->add_option("--points", fig2_cmd.points, "Grid size")
      ->capture_default_str();
  add_output_opts(fig2_app, fig2_cmd.output);

  Fig3Cmd fig3_cmd;
  auto* fig3_app = app.add_subcommand(
      "fig3", "Maximal Cauchy-Schwarz ratio vs visibility per pairing");
  add_output_opts(fig3_app, fig3_cmd.output);

  VerifyCmd verify_cmd;
  auto* verify_app = app.add_subcommand(
      "verify", "Cross-check the closed forms against the Fock engine");
  verify_app->add_option("--pair", verify_cmd.pair_labels,
                         "Restrict to these pairings (default: all)");
  verify_app->add_option("--nbar", verify_cmd.nbars,
                         "Restrict to these nbar values (default grid)");
  verify_app->add_option("--dphi-count", verify_cmd.dphi_count,
                         "Phase differences per case")
      ->capture_default_str();
  verify_app->add_option("--tol", verify_cmd.tol,
                         "Relative deviation threshold")
      ->capture_default_str();
  verify_app->add_option("--tail-tol", verify_cmd.tail_tol,
                         "Truncation tail tolerance")
      ->capture_default_str();
  verify_app->add_option("--truncation", verify_cmd.truncation,
                         "Force this truncation instead of choosing");
  add_output_opts(verify_app, verify_cmd.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  verify_cmd.table_requested =
      verify_app->count("--out") > 0 || verify_app->count("--format") > 0;

  try {
    if (app.got_subcommand(visibility_app)) return visibility_cmd.run();
    if (app.got_subcommand(g2_app)) return g2_cmd.run();
    if (app.got_subcommand(schwarz_app)) return schwarz_cmd.run();
    if (app.got_subcommand(bell_app)) return bell_cmd.run();
    if (app.got_subcommand(fig2_app)) return fig2_cmd.run();
    if (app.got_subcommand(fig3_app)) return fig3_cmd.run();
    if (app.got_subcommand(verify_app)) return verify_cmd.run();
  } catch (const ppcorr::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
