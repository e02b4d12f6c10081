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

#ifndef SBFLBENCH_MINILANG_HPP
#define SBFLBENCH_MINILANG_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "sbflbench/analysis.hpp"
#include "sbflbench/ast.hpp"
#include "sbflbench/check.hpp"
#include "sbflbench/lexer.hpp"
#include "sbflbench/parser.hpp"
#include "sbflbench/printer.hpp"

namespace sbflbench {

/// Parses and statically checks a MiniLang compilation unit. Throws
/// ParseError on syntax errors, duplicate names, undefined identifiers,
/// type mismatches, or a non-void function with a return-less path.
inline Program parse(std::string_view source, std::string source_name = "<input>") {
  Lexer lexer(source);
  Parser parser(lexer.tokenize());
  Program program = parser.parse_program(std::move(source_name));
  check_program(program);
  return program;
}

inline Program parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open program file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

}  // namespace sbflbench

#endif  // SBFLBENCH_MINILANG_HPP
