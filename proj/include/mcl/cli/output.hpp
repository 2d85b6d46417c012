#pragma once

#include <string>
#include <vector>

#include "mcl/core/pi_scaled.hpp"

namespace mcl::cli {

struct Cell {
  enum class Kind { text, integer, real, rational };
  Kind kind = Kind::text;
  std::string text;  // text, integer and rational cells
  double real = 0;

  static Cell str(std::string s) { return {Kind::text, std::move(s), 0}; }
  static Cell integer(long long v) { return {Kind::integer, std::to_string(v), 0}; }
  static Cell number(double v) { return {Kind::real, {}, v}; }
  static Cell rational(const Rational& q) { return {Kind::rational, q.str(), 0}; }
  /// p/q when rational, else the float value.
  static Cell exact(const PiScaled& v);
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

/// %.17g; nan and inf spelled out.
std::string format_real(double v);

/// The header line, then the tables as RFC 4180 CSV separated by blank lines.
std::string render_csv(const std::string& header, const std::vector<Table>& tables);
/// Line one is the header object, line two {"<table>": [{column: value}, ...], ...}.
std::string render_json(const std::string& header, const std::vector<Table>& tables);

}  // namespace mcl::cli
