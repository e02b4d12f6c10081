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

#ifndef SBFLBENCH_DIAGNOSTICS_HPP
#define SBFLBENCH_DIAGNOSTICS_HPP

#include <stdexcept>
#include <string>

namespace sbflbench {

struct SourceLoc {
  int line = 0;    // 1-based; 0 = unknown
  int column = 0;  // 1-based
};

/// Raised for syntax and static-semantics errors (undefined names, type
/// mismatches, missing returns). Carries the offending source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLoc loc, const std::string& message)
      : std::runtime_error("line " + std::to_string(loc.line) + ", column " +
                           std::to_string(loc.column) + ": " + message),
        loc_(loc),
        message_(message) {}

  SourceLoc location() const { return loc_; }
  const std::string& message() const { return message_; }

 private:
  SourceLoc loc_;
  std::string message_;
};

/// Raised for harness misconfiguration: malformed suite files, signature
/// mismatches between a test case and its target function, bad manifests.
/// Distinct from a test failure.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace sbflbench

#endif  // SBFLBENCH_DIAGNOSTICS_HPP
