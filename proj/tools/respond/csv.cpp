#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace respond::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return {buf, res.ptr};
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) text_ += ',';
    text_ += quote(columns_[i]);
  }
  text_ += '\n';
}

void CsvTable::add(std::vector<CsvCell> row) {
  if (row.size() != columns_.size()) throw std::logic_error("CSV row width does not match header");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) text_ += ',';
    std::visit(
        [this](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            text_ += format_double(v);
          } else if constexpr (std::is_same_v<T, long long>) {
            text_ += std::to_string(v);
          } else {
            text_ += quote(v);
          }
        },
        row[i]);
  }
  text_ += '\n';
  ++rows_;
}

}  // namespace respond::cli
