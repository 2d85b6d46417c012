#include "mcl/cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace mcl::cli {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string cell_csv(const Cell& c) {
  return c.kind == Cell::Kind::real ? format_real(c.real) : csv_field(c.text);
}

std::string cell_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::integer:
      return c.text;
    case Cell::Kind::real:
      return std::isfinite(c.real) ? format_real(c.real) : nlohmann::json(format_real(c.real)).dump();
    default:
      return nlohmann::json(c.text).dump();
  }
}

}  // namespace

Cell Cell::exact(const PiScaled& v) {
  if (v.is_rational()) return rational(v.rational());
  return number(v.to_double());
}

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("Table " + name + ": row width mismatch");
  rows.push_back(std::move(row));
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_csv(const std::string& header, const std::vector<Table>& tables) {
  std::string out = header + "\n";
  for (std::size_t t = 0; t < tables.size(); ++t) {
    if (t > 0) out += "\n";
    const auto& tab = tables[t];
    for (std::size_t i = 0; i < tab.columns.size(); ++i) out += (i ? "," : "") + csv_field(tab.columns[i]);
    out += "\n";
    for (const auto& row : tab.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + cell_csv(row[i]);
      out += "\n";
    }
  }
  return out;
}

std::string render_json(const std::string& header, const std::vector<Table>& tables) {
  std::string out = header + "\n{";
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& tab = tables[t];
    out += (t ? "," : "") + nlohmann::json(tab.name).dump() + ":[";
    for (std::size_t r = 0; r < tab.rows.size(); ++r) {
      out += r ? ",{" : "{";
      for (std::size_t i = 0; i < tab.columns.size(); ++i) {
        out += (i ? "," : "") + nlohmann::json(tab.columns[i]).dump() + ":" + cell_json(tab.rows[r][i]);
      }
      out += "}";
    }
    out += "]";
  }
  return out + "}\n";
}

}  // namespace mcl::cli
