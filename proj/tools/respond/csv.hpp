#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "respond/model.hpp"

namespace respond::cli {

/// Doubles with 17 significant digits, shortest of fixed/scientific.
std::string format_double(double v);

using CsvCell = std::variant<double, long long, std::string>;

/// In-memory CSV with a fixed header. Rows must match the header width.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  void add(std::vector<CsvCell> row);

  [[nodiscard]] const std::vector<std::string>& columns() const { return columns_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  /// Header plus rows, LF terminated.
  [[nodiscard]] const std::string& text() const { return text_; }

 private:
  std::vector<std::string> columns_;
  std::size_t rows_ = 0;
  std::string text_;
};

inline CsvCell cell(int v) { return static_cast<long long>(v); }
inline CsvCell cell(double v) { return v; }
inline CsvCell cell(std::string_view s) { return std::string(s); }

}  // namespace respond::cli
