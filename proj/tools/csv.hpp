#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <fmt/format.h>

namespace liouville::cli {

using Cell = std::variant<std::string, double, std::int64_t>;

// Doubles at 17 significant digits so a file round-trips exactly.
inline std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return fmt::format("{:.17g}", *d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return fmt::format("{}", *i);
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header) : out_(out), columns_(header.size()) {
    std::vector<Cell> h(header.begin(), header.end());
    row(h);
  }

  void row(const std::vector<Cell>& cells) {
    if (cells.size() != columns_) throw std::logic_error("csv row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << format_cell(cells[i]);
    }
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  std::size_t columns_;
};

}  // namespace liouville::cli
