#pragma once

// CSV tables: '#' comment block, one header line, comma-separated cells.
// Numbers are written with 17 significant digits so every double survives a
// write/read cycle exactly; write(read(text)) == text for any emitted file.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rabipat {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> comments;  // without the leading "# "
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);  // throws on width mismatch
  int column(std::string_view name) const;  // -1 when absent
};

std::string format_number(double v);
std::string format_cell(const Cell& c);

std::string write_csv(const Table& t);
void write_csv(const Table& t, std::ostream& out);

// Cells whose text is exactly the 17-digit rendering of a double become
// numbers; everything else stays a string.
Table read_csv(std::string_view text);

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

}  // namespace rabipat
