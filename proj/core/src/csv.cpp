#include "vecalloc/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace vecalloc {
namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  if (text == "nan") return std::nan("");
  if (text == "inf") return INFINITY;
  if (text == "-inf") return -INFINITY;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  return value;
}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size())
    throw std::invalid_argument("row has " + std::to_string(cells.size()) + " cells, expected " +
                                std::to_string(columns_.size()));
  rows_.push_back(std::move(cells));
}

void Table::write_csv(std::ostream& os) const {
  for (const auto& c : comments_) os << "# " << c << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
}

void Table::write_gnuplot(std::ostream& os) const {
  for (const auto& c : comments_) os << "# " << c << '\n';
  os << '#';
  for (const auto& c : columns_) os << ' ' << c;
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << '\n';
  }
}

Table read_csv(std::istream& is) {
  std::string line;
  std::optional<Table> table;
  while (std::getline(is, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (!table) {
      table.emplace(split(line, ','));
    } else {
      table->add_row(split(line, ','));
    }
  }
  if (!table) throw std::runtime_error("CSV has no header line");
  return std::move(*table);
}

}  // namespace vecalloc
