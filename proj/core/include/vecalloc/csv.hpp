#ifndef VECALLOC_CSV_HPP
#define VECALLOC_CSV_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace vecalloc {

/// Shortest representation that parses back to the same double.
std::string format_double(double value);

double parse_double(std::string_view text);

/// A small in-memory table written either as CSV or as a whitespace-delimited
/// gnuplot data file. Comment lines are emitted first, prefixed with "# ".
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_comment(std::string line) { comments_.push_back(std::move(line)); }
  void add_row(std::vector<std::string> cells);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  void write_csv(std::ostream& os) const;
  void write_gnuplot(std::ostream& os) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> comments_;
  std::vector<std::vector<std::string>> rows_;
};

/// Parses CSV text produced by Table::write_csv; '#' lines are skipped and
/// the first remaining line is the header.
Table read_csv(std::istream& is);

}  // namespace vecalloc

#endif  // VECALLOC_CSV_HPP
