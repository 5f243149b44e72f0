#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ppcorr {

/// Rounds to 12 significant digits. Every serialized number passes through
/// this first, so CSV and JSON carry identical values and repeated runs are
/// byte-identical.
double round_sig12(double value);

/// The %.12g rendering of round_sig12(value).
std::string format_sig12(double value);

/// One table cell: a number, the infinity marker, a boolean, or text.
struct Cell {
  enum class Kind { Number, Infinite, Boolean, Text };
  Kind kind = Kind::Number;
  double number = 0.0;
  bool flag = false;
  std::string text;

  static Cell num(double value) { return {Kind::Number, value, false, {}}; }
  static Cell inf() { return {Kind::Infinite, 0.0, false, {}}; }
  static Cell boolean(bool value) {
    return {Kind::Boolean, 0.0, value, {}};
  }
  static Cell txt(std::string value) {
    return {Kind::Text, 0.0, false, std::move(value)};
  }
};

struct Column {
  std::string name;
  /// Divergent ratios serialize as "inf" in CSV; in JSON the cell becomes
  /// null and a sibling "<name>_infinite" boolean carries the flag.
  bool inf_capable = false;
};

struct SweepTable {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells);
};

struct ReportMeta {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
};

/// Header row then data rows, comma separated, "\n" line ends, no quoting
/// (cell text never contains commas).
void write_csv(std::ostream& out, const SweepTable& table);

/// {"meta": {"command", "parameters", "version"}, "rows": [...]} with keys
/// in insertion order.
void write_json(std::ostream& out, const SweepTable& table,
                const ReportMeta& meta);

}  // namespace ppcorr
