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

#ifndef SBFLBENCH_ANALYSIS_HPP
#define SBFLBENCH_ANALYSIS_HPP

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sbflbench/ast.hpp"

namespace sbflbench {

struct StatementInfo {
  StatementId id;
  int nesting_depth;  // 1 = directly in a function body
  std::string enclosing_function;
  StatementKind kind;
  SourceLoc loc;
};

struct BranchInfo {
  BranchId id;
  StatementId owning_statement;
  bool arm;  // true arm / false arm
};

namespace detail {

// Visits every statement in statement-id order (the parser assigns ids in
// pre-order, which this walk reproduces) together with its nesting depth.
inline void walk_block(const Block& block, int depth,
                       const std::function<void(const Stmt&, int)>& visit) {
  for (const auto& stmt : block.stmts) {
    visit(*stmt, depth);
    if (const auto* f = std::get_if<IfStmt>(&stmt->node)) {
      walk_block(f->then_body, depth + 1, visit);
      if (f->else_body) walk_block(*f->else_body, depth + 1, visit);
    } else if (const auto* w = std::get_if<WhileStmt>(&stmt->node)) {
      walk_block(w->body, depth + 1, visit);
    }
  }
}

}  // namespace detail

inline void for_each_statement(const Program& program,
                               const std::function<void(const Stmt&, int, const FunctionDecl&)>& visit) {
  for (const auto& fn : program.functions)
    detail::walk_block(fn.body, 1, [&](const Stmt& s, int depth) { visit(s, depth, fn); });
}

/// One entry per executable statement, sorted by id. Depth 1 means directly
/// inside a function body; each enclosing if-arm or while-body adds 1.
inline std::vector<StatementInfo> enumerate_statements(const Program& program) {
  std::vector<StatementInfo> infos;
  for_each_statement(program, [&infos](const Stmt& s, int depth, const FunctionDecl& fn) {
    infos.push_back(StatementInfo{s.id, depth, fn.name, kind_of(s), s.loc});
  });
  return infos;
}

/// Two entries (true arm, false arm) per if and while statement, in
/// statement order. Branch ids are dense positions in this list.
inline std::vector<BranchInfo> enumerate_branches(const Program& program) {
  std::vector<BranchInfo> branches;
  for_each_statement(program, [&branches](const Stmt& s, int, const FunctionDecl&) {
    const StatementKind k = kind_of(s);
    if (k == StatementKind::If || k == StatementKind::While) {
      const BranchId base = static_cast<BranchId>(branches.size());
      branches.push_back(BranchInfo{base, s.id, true});
      branches.push_back(BranchInfo{base + 1, s.id, false});
    }
  });
  return branches;
}

/// Maps a branching statement id to the BranchId of its true arm (the false
/// arm is base + 1). Built once per program and shared by the interpreter.
inline std::unordered_map<StatementId, BranchId> branch_base_index(const Program& program) {
  std::unordered_map<StatementId, BranchId> base;
  for (const BranchInfo& b : enumerate_branches(program))
    if (b.arm) base.emplace(b.owning_statement, b.id);
  return base;
}

inline const Stmt* find_statement(const Program& program, StatementId id) {
  const Stmt* found = nullptr;
  for_each_statement(program, [&found, id](const Stmt& s, int, const FunctionDecl&) {
    if (s.id == id) found = &s;
  });
  return found;
}

inline int statement_depth(const Program& program, StatementId id) {
  int result = -1;
  for_each_statement(program, [&result, id](const Stmt& s, int depth, const FunctionDecl&) {
    if (s.id == id) result = depth;
  });
  return result;
}

}  // namespace sbflbench

#endif  // SBFLBENCH_ANALYSIS_HPP
