#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace spintherm::cli {

struct Null {
  friend bool operator==(Null, Null) = default;
};

using Cell = std::variant<Null, bool, long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws std::logic_error if the row width does not match the header.
  void add_row(std::vector<Cell> row);
};

enum class Format { Csv, Json };

/// "csv" or "json"; anything else throws std::invalid_argument.
Format parse_format(std::string_view name);

/// Shortest decimal that round-trips to the same double; "inf", "-inf", "nan"
/// for non-finite values.
std::string format_double(double v);

/// Header line, then one line per row. Null cells are empty.
void write_csv(std::ostream& out, const Table& table);

/// Array of objects keyed by the column names, one object per line.
/// Non-finite doubles and Null cells become null.
void write_json(std::ostream& out, const Table& table);

void write_table(std::ostream& out, const Table& table, Format format);

}  // namespace spintherm::cli
