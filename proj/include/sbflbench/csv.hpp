// Copyright 2026 The sbflbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SBFLBENCH_CSV_HPP
#define SBFLBENCH_CSV_HPP

#include <cstdio>
#include <string>
#include <vector>

namespace sbflbench {

/// CSV numbers carry 6 significant digits; printf's decimal conversion is
/// correctly rounded (round-half-even) on this platform, which keeps golden
/// files diffable. JSON output carries full precision instead.
inline std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += '"';
  return quoted;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) {
    write_row(std::move(header));
  }

  void write_row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ += ',';
      out_ += csv_escape(fields[i]);
    }
    out_ += '\n';
  }

  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

}  // namespace sbflbench

#endif  // SBFLBENCH_CSV_HPP
