#pragma once

// Column-oriented sweep results and their CSV dialect:
//   # key=value        metadata lines
//   col_a,col_b,...    header
//   1.5,2.25,...       rows, 17 significant digits, '.' decimal point
// Values survive a write/parse round trip bit-exactly.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "mim/error.hpp"

namespace mim {

/// Shortest-safe decimal text for a double: 17 significant digits, locale independent.
inline std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline double parse_number(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::OutOfRange, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

inline std::vector<std::string_view> split_fields(std::string_view line, char sep = ',') {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

class SweepTable {
public:
  SweepTable() = default;
  explicit SweepTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& meta() const noexcept { return meta_; }

  void set_meta(std::string key, std::string value) {
    for (auto& kv : meta_) {
      if (kv.first == key) {
        kv.second = std::move(value);
        return;
      }
    }
    meta_.emplace_back(std::move(key), std::move(value));
  }

  /// Appends a row; the first column is the abscissa and must strictly increase.
  void add_row(std::vector<double> row) {
    if (row.size() != columns_.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "row has " + std::to_string(row.size()) + " entries, table has " +
                                                  std::to_string(columns_.size()) + " columns");
    }
    if (!rows_.empty() && !(row.front() > rows_.back().front())) {
      throw Error(ErrorCode::OutOfRange, "abscissa must be strictly increasing");
    }
    rows_.push_back(std::move(row));
  }

  std::size_t column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (columns_[i] == name) return i;
    }
    throw Error(ErrorCode::IndexOutOfRange, "no column named " + std::string(name));
  }

  std::vector<double> column(std::string_view name) const {
    const std::size_t idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r[idx]);
    return out;
  }

private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::pair<std::string, std::string>> meta_;
};

inline void write_csv(std::ostream& os, const SweepTable& table) {
  for (const auto& [k, v] : table.meta()) os << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < table.columns().size(); ++i) os << (i ? "," : "") << table.columns()[i];
  os << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
}

inline SweepTable read_csv(std::istream& is) {
  std::string line;
  std::vector<std::pair<std::string, std::string>> meta;
  bool have_header = false;
  SweepTable table;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body(line);
      body.remove_prefix(1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      const auto eq = body.find('=');
      meta.emplace_back(std::string(body.substr(0, eq)),
                        eq == std::string_view::npos ? std::string{} : std::string(body.substr(eq + 1)));
      continue;
    }
    if (!have_header) {
      std::vector<std::string> cols;
      for (auto f : split_fields(line)) cols.emplace_back(f);
      table = SweepTable(std::move(cols));
      have_header = true;
      continue;
    }
    std::vector<double> row;
    for (auto f : split_fields(line)) row.push_back(parse_number(f));
    table.add_row(std::move(row));
  }
  for (auto& [k, v] : meta) table.set_meta(std::move(k), std::move(v));
  return table;
}

inline std::string to_csv(const SweepTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

/// a, a + step, ..., up to b inclusive (b itself is included when it lies on the grid).
inline std::vector<double> linear_grid(double a, double b, double step) {
  if (!(step > 0.0) || !(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::OutOfRange, "grid needs a < b and step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(std::min(b, a + step * static_cast<double>(k)));
  return out;
}

/// `count` points from a to b inclusive, evenly spaced in log scale.
inline std::vector<double> log_grid(double a, double b, std::size_t count) {
  if (!(a > 0.0) || !(a < b) || count < 2) throw Error(ErrorCode::OutOfRange, "log grid needs 0 < a < b, count >= 2");
  std::vector<double> out(count);
  const double la = std::log(a);
  const double lb = std::log(b);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = std::exp(la + (lb - la) * static_cast<double>(k) / static_cast<double>(count - 1));
  }
  out.front() = a;
  out.back() = b;
  return out;
}

}  // namespace mim
