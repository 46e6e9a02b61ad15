#include "rabipat/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "rabipat/errors.hpp"

namespace rabipat {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != header.size()) {
    throw DimensionMismatch("row has " + std::to_string(row.size()) + " cells, header has " +
                            std::to_string(header.size()));
  }
  rows.push_back(std::move(row));
}

int Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_cell(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_number(*d);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n\r") != std::string::npos) {
    throw InvalidArgument("CSV string cell contains a reserved character: " + s);
  }
  return s;
}

void write_csv(const Table& t, std::ostream& out) {
  for (const auto& c : t.comments) {
    if (c.find('\n') != std::string::npos) throw InvalidArgument("comment lines must not contain newlines");
    out << "# " << c << '\n';
  }
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    out << (i ? "," : "") << t.header[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_cell(row[i]);
    }
    out << '\n';
  }
}

std::string write_csv(const Table& t) {
  std::ostringstream os;
  write_csv(t, os);
  return os.str();
}

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Cell parse_cell(const std::string& text) {
  if (text.empty()) return text;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() + text.size() && format_number(v) == text) return v;
  return text;
}

}  // namespace

Table read_csv(std::string_view text) {
  Table t;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) throw InvalidArgument("CSV text must end with a newline");
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (!have_header && line.rfind("# ", 0) == 0) {
      t.comments.emplace_back(line.substr(2));
      continue;
    }
    if (!have_header) {
      t.header = split(line);
      have_header = true;
      continue;
    }
    std::vector<Cell> row;
    for (auto& s : split(line)) row.push_back(parse_cell(s));
    t.add_row(std::move(row));
  }
  if (!have_header) throw InvalidArgument("CSV text has no header line");
  return t;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace rabipat
