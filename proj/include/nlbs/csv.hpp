#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace nlbs {

/// Formats a double with 17 significant digits (round-trip exact).
inline std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// RFC-4180-style field quoting; only applied when needed.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

/// Minimal CSV emitter: header row mandatory, '.' decimal separator,
/// 17 significant digits, byte-stable for identical inputs.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& names) { write_row(names); }

  void row(const std::vector<std::string>& fields) { write_row(fields); }

  void row_numbers(const std::vector<double>& values) {
    std::vector<std::string> fields;
    fields.reserve(values.size());
    for (double v : values) fields.push_back(csv_number(v));
    write_row(fields);
  }

 private:
  void write_row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      out_ << csv_field(fields[i]);
    }
    out_ << '\n';
  }

  std::ostream& out_;
};

}  // namespace nlbs
