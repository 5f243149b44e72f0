#include "ppcorr/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "ppcorr/version.hpp"

namespace ppcorr {

double round_sig12(double value) {
  if (!std::isfinite(value)) return value;
  if (value == 0.0) return 0.0;  // canonicalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

std::string format_sig12(double value) {
  if (value == 0.0) value = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void SweepTable::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns.size()) {
    throw std::logic_error("row width does not match the column count");
  }
  rows.push_back(std::move(cells));
}

void write_csv(std::ostream& out, const SweepTable& table) {
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << table.columns[i].name;
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      const Cell& cell = row[i];
      switch (cell.kind) {
        case Cell::Kind::Number: out << format_sig12(cell.number); break;
        case Cell::Kind::Infinite: out << "inf"; break;
        case Cell::Kind::Boolean: out << (cell.flag ? "true" : "false"); break;
        case Cell::Kind::Text: out << cell.text; break;
      }
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const SweepTable& table,
                const ReportMeta& meta) {
  nlohmann::ordered_json doc;
  doc["meta"]["command"] = meta.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta.parameters) params[key] = value;
  doc["meta"]["parameters"] = std::move(params);
  doc["meta"]["version"] = kVersion;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (size_t i = 0; i < row.size(); ++i) {
      const Column& col = table.columns[i];
      const Cell& cell = row[i];
      switch (cell.kind) {
        case Cell::Kind::Number:
          obj[col.name] = round_sig12(cell.number);
          break;
        case Cell::Kind::Infinite:
          obj[col.name] = nullptr;
          break;
        case Cell::Kind::Boolean:
          obj[col.name] = cell.flag;
          break;
        case Cell::Kind::Text:
          obj[col.name] = cell.text;
          break;
      }
      if (col.inf_capable) {
        obj[col.name + "_infinite"] = cell.kind == Cell::Kind::Infinite;
      }
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace ppcorr
