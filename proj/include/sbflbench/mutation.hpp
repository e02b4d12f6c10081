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

#ifndef SBFLBENCH_MUTATION_HPP
#define SBFLBENCH_MUTATION_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sbflbench/analysis.hpp"
#include "sbflbench/ast.hpp"
#include "sbflbench/printer.hpp"

namespace sbflbench {

/// Single-edit mutation operators:
///
///   ConditionalsBoundary   a < b   ->  a <= b     (< <-> <=, > <-> >=)
///   Increments             n++     ->  n--        (and n-- -> n++)
///   InvertNegatives        -n      ->  n
///   Math                   a + b   ->  a - b      (+ <-> -, * <-> /, % -> *)
///   NegateConditionals     a == b  ->  a != b     (logical complement:
///                                                  == <-> !=, < -> >=, <= -> >,
///                                                  > -> <=, >= -> <)
///   VoidMethodCalls        method(); ->  ;        (void callee only)
///   PrimitiveReturns       return 5; ->  return 0;   (0 / 0.0 / false;
///                                                  skipped when the return
///                                                  is already that literal)
///
/// Every operator preserves types, statement ids and the statement universe,
/// so original and mutant spectra stay aligned.
enum class MutationOperator {
  ConditionalsBoundary,
  Increments,
  InvertNegatives,
  Math,
  NegateConditionals,
  VoidMethodCalls,
  PrimitiveReturns,
};

inline constexpr MutationOperator kAllMutationOperators[] = {
    MutationOperator::ConditionalsBoundary, MutationOperator::Increments,
    MutationOperator::InvertNegatives,      MutationOperator::Math,
    MutationOperator::NegateConditionals,   MutationOperator::VoidMethodCalls,
    MutationOperator::PrimitiveReturns,
};

inline const char* to_string(MutationOperator op) {
  switch (op) {
    case MutationOperator::ConditionalsBoundary: return "ConditionalsBoundary";
    case MutationOperator::Increments: return "Increments";
    case MutationOperator::InvertNegatives: return "InvertNegatives";
    case MutationOperator::Math: return "Math";
    case MutationOperator::NegateConditionals: return "NegateConditionals";
    case MutationOperator::VoidMethodCalls: return "VoidMethodCalls";
    case MutationOperator::PrimitiveReturns: return "PrimitiveReturns";
  }
  return "?";
}

inline std::optional<MutationOperator> mutation_operator_from_string(const std::string& s) {
  for (const MutationOperator op : kAllMutationOperators)
    if (s == to_string(op)) return op;
  return std::nullopt;
}

struct MutationSite {
  MutationOperator op;
  StatementId statement;
  // Path to the mutated expression node: first an index into the statement's
  // expression roots, then child indices. Empty for statement-level
  // operators (Increments, VoidMethodCalls, PrimitiveReturns).
  std::vector<int> expr_path;
  std::string description;
  SourceLoc loc;
};

struct Mutant {
  int id = 0;
  MutationSite site;
  Program mutated_program;
  StatementId fault_statement;
  int fault_depth;
};

namespace detail {

inline std::optional<BinaryOp> conditionals_boundary_swap(BinaryOp op) {
  switch (op) {
    case BinaryOp::Lt: return BinaryOp::Le;
    case BinaryOp::Le: return BinaryOp::Lt;
    case BinaryOp::Gt: return BinaryOp::Ge;
    case BinaryOp::Ge: return BinaryOp::Gt;
    default: return std::nullopt;
  }
}

inline std::optional<BinaryOp> math_swap(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return BinaryOp::Sub;
    case BinaryOp::Sub: return BinaryOp::Add;
    case BinaryOp::Mul: return BinaryOp::Div;
    case BinaryOp::Div: return BinaryOp::Mul;
    case BinaryOp::Mod: return BinaryOp::Mul;
    default: return std::nullopt;
  }
}

inline std::optional<BinaryOp> negate_conditional(BinaryOp op) {
  switch (op) {
    case BinaryOp::Eq: return BinaryOp::Ne;
    case BinaryOp::Ne: return BinaryOp::Eq;
    case BinaryOp::Lt: return BinaryOp::Ge;
    case BinaryOp::Le: return BinaryOp::Gt;
    case BinaryOp::Gt: return BinaryOp::Le;
    case BinaryOp::Ge: return BinaryOp::Lt;
    default: return std::nullopt;
  }
}

inline std::string binary_rewrite_description(const Expr& expr, BinaryOp new_op) {
  ExprPtr rewritten = clone_expr(expr);
  std::get<BinaryExpr>(rewritten->node).op = new_op;
  return pretty_print(expr) + " -> " + pretty_print(*rewritten);
}

// Zero literal of the function's return type, or nullopt when `value` is
// already exactly that literal (the mutation would be an identity).
inline std::optional<Expr> primitive_return_replacement(const Expr& value, ValueType return_type) {
  switch (return_type) {
    case ValueType::Int:
      if (const auto* lit = std::get_if<IntLit>(&value.node); lit && lit->value == 0)
        return std::nullopt;
      return Expr{IntLit{0}, value.loc};
    case ValueType::Float:
      if (const auto* lit = std::get_if<FloatLit>(&value.node); lit && lit->value == 0.0)
        return std::nullopt;
      return Expr{FloatLit{0.0}, value.loc};
    case ValueType::Bool:
      if (const auto* lit = std::get_if<BoolLit>(&value.node); lit && !lit->value)
        return std::nullopt;
      return Expr{BoolLit{false}, value.loc};
  }
  return std::nullopt;
}

class SiteEnumerator {
 public:
  explicit SiteEnumerator(const Program& program) : program_(program) {
    for (const auto& fn : program.functions) functions_.emplace(fn.name, &fn);
  }

  std::vector<MutationSite> enumerate() {
    sites_.clear();
    for_each_statement(program_, [this](const Stmt& stmt, int, const FunctionDecl& fn) {
      collect_statement_sites(stmt, fn);
      const auto roots = stmt_expr_roots(stmt);
      for (int slot = 0; slot < static_cast<int>(roots.size()); ++slot)
        collect_expr_sites(*roots[slot], stmt, {slot});
    });
    return std::move(sites_);
  }

 private:
  void collect_statement_sites(const Stmt& stmt, const FunctionDecl& fn) {
    if (const auto* incdec = std::get_if<IncDecStmt>(&stmt.node)) {
      Stmt flipped;
      flipped.node = IncDecStmt{incdec->name, !incdec->increment};
      push(MutationOperator::Increments, stmt,
           statement_text(stmt) + " -> " + statement_text(flipped));
    } else if (const auto* call_stmt = std::get_if<CallStmt>(&stmt.node)) {
      const auto& call = std::get<CallExpr>(call_stmt->call->node);
      const auto callee = functions_.find(call.callee);
      if (callee != functions_.end() && !callee->second->return_type)
        push(MutationOperator::VoidMethodCalls, stmt, statement_text(stmt) + " -> ;");
    } else if (const auto* ret = std::get_if<ReturnStmt>(&stmt.node)) {
      if (ret->value && fn.return_type) {
        if (auto replacement = primitive_return_replacement(*ret->value, *fn.return_type)) {
          Stmt rewritten;
          rewritten.node = ReturnStmt{make_expr(std::move(*replacement))};
          push(MutationOperator::PrimitiveReturns, stmt,
               statement_text(stmt) + " -> " + statement_text(rewritten));
        }
      }
    }
  }

  void collect_expr_sites(const Expr& expr, const Stmt& stmt, std::vector<int> path) {
    if (const auto* bin = std::get_if<BinaryExpr>(&expr.node)) {
      if (const auto swapped = conditionals_boundary_swap(bin->op))
        push(MutationOperator::ConditionalsBoundary, stmt,
             binary_rewrite_description(expr, *swapped), path, expr.loc);
      if (const auto swapped = math_swap(bin->op))
        push(MutationOperator::Math, stmt, binary_rewrite_description(expr, *swapped), path,
             expr.loc);
      if (const auto negated = negate_conditional(bin->op))
        push(MutationOperator::NegateConditionals, stmt,
             binary_rewrite_description(expr, *negated), path, expr.loc);
    } else if (const auto* unary = std::get_if<UnaryExpr>(&expr.node)) {
      if (unary->op == UnaryOp::Neg)
        push(MutationOperator::InvertNegatives, stmt,
             pretty_print(expr) + " -> " + pretty_print(*unary->operand), path, expr.loc);
    }
    for (int i = 0; i < expr_child_count(expr); ++i) {
      std::vector<int> child_path = path;
      child_path.push_back(i);
      collect_expr_sites(*expr_child(expr, i), stmt, std::move(child_path));
    }
  }

  void push(MutationOperator op, const Stmt& stmt, std::string description,
            std::vector<int> path = {}, std::optional<SourceLoc> loc = std::nullopt) {
    sites_.push_back(
        MutationSite{op, stmt.id, std::move(path), std::move(description), loc.value_or(stmt.loc)});
  }

  const Program& program_;
  std::unordered_map<std::string, const FunctionDecl*> functions_;
  std::vector<MutationSite> sites_;
};

inline Stmt* find_statement_mut(Program& program, StatementId id) {
  Stmt* found = nullptr;
  const std::function<void(Block&)> walk = [&](Block& block) {
    for (auto& stmt : block.stmts) {
      if (stmt->id == id) found = stmt.get();
      if (auto* f = std::get_if<IfStmt>(&stmt->node)) {
        walk(f->then_body);
        if (f->else_body) walk(*f->else_body);
      } else if (auto* w = std::get_if<WhileStmt>(&stmt->node)) {
        walk(w->body);
      }
    }
  };
  for (auto& fn : program.functions) walk(fn.body);
  return found;
}

inline Expr* resolve_expr_path(Stmt& stmt, const std::vector<int>& path) {
  if (path.empty()) return nullptr;
  const auto roots = stmt_expr_roots(stmt);
  if (path[0] < 0 || path[0] >= static_cast<int>(roots.size())) return nullptr;
  Expr* node = roots[static_cast<std::size_t>(path[0])];
  for (std::size_t i = 1; i < path.size() && node; ++i) node = expr_child(*node, path[i]);
  return node;
}

}  // namespace detail

/// All mutation sites of a program, in deterministic order: statements by
/// id; within a statement, the statement-level site (if any) first, then
/// expression sites in pre-order, with ConditionalsBoundary before Math
/// before NegateConditionals at a node matched by several operators.
inline std::vector<MutationSite> enumerate_mutation_sites(const Program& program) {
  return detail::SiteEnumerator(program).enumerate();
}

/// Applies one site to a fresh copy of the program. Statement ids, the
/// statement universe, and all static types are preserved.
inline Mutant apply_mutation(const Program& program, const MutationSite& site, int id = 0) {
  Mutant mutant;
  mutant.id = id;
  mutant.site = site;
  mutant.fault_statement = site.statement;
  mutant.fault_depth = statement_depth(program, site.statement);
  if (mutant.fault_depth < 0)
    throw std::logic_error("apply_mutation: stale site (statement id not found)");
  mutant.mutated_program = clone_program(program);
  mutant.mutated_program.source_name = program.source_name;

  Stmt* stmt = detail::find_statement_mut(mutant.mutated_program, site.statement);
  if (!stmt) throw std::logic_error("apply_mutation: stale site (statement id not found)");

  const auto stale = [&]() -> std::logic_error {
    return std::logic_error("apply_mutation: site does not match the statement (stale path)");
  };

  switch (site.op) {
    case MutationOperator::Increments: {
      auto* incdec = std::get_if<IncDecStmt>(&stmt->node);
      if (!incdec) throw stale();
      incdec->increment = !incdec->increment;
      break;
    }
    case MutationOperator::VoidMethodCalls: {
      if (!std::holds_alternative<CallStmt>(stmt->node)) throw stale();
      stmt->node = NoOpStmt{};
      break;
    }
    case MutationOperator::PrimitiveReturns: {
      auto* ret = std::get_if<ReturnStmt>(&stmt->node);
      if (!ret || !ret->value) throw stale();
      const FunctionDecl* fn = nullptr;
      for_each_statement(mutant.mutated_program,
                         [&fn, stmt](const Stmt& s, int, const FunctionDecl& f) {
                           if (s.id == stmt->id) fn = &f;
                         });
      if (!fn || !fn->return_type) throw stale();
      auto replacement = detail::primitive_return_replacement(*ret->value, *fn->return_type);
      if (!replacement) throw stale();
      replacement->loc = ret->value->loc;
      ret->value = make_expr(std::move(*replacement));
      break;
    }
    case MutationOperator::ConditionalsBoundary:
    case MutationOperator::Math:
    case MutationOperator::NegateConditionals: {
      Expr* node = detail::resolve_expr_path(*stmt, site.expr_path);
      if (!node) throw stale();
      auto* bin = std::get_if<BinaryExpr>(&node->node);
      if (!bin) throw stale();
      std::optional<BinaryOp> swapped;
      if (site.op == MutationOperator::ConditionalsBoundary)
        swapped = detail::conditionals_boundary_swap(bin->op);
      else if (site.op == MutationOperator::Math)
        swapped = detail::math_swap(bin->op);
      else
        swapped = detail::negate_conditional(bin->op);
      if (!swapped) throw stale();
      bin->op = *swapped;
      break;
    }
    case MutationOperator::InvertNegatives: {
      Expr* node = detail::resolve_expr_path(*stmt, site.expr_path);
      if (!node) throw stale();
      auto* unary = std::get_if<UnaryExpr>(&node->node);
      if (!unary || unary->op != UnaryOp::Neg) throw stale();
      ExprPtr operand = std::move(unary->operand);
      *node = std::move(*operand);
      break;
    }
  }
  return mutant;
}

/// One mutant per site, ids 0..k-1 in site order.
inline std::vector<Mutant> generate_all_mutants(const Program& program) {
  std::vector<Mutant> mutants;
  const std::vector<MutationSite> sites = enumerate_mutation_sites(program);
  mutants.reserve(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i)
    mutants.push_back(apply_mutation(program, sites[i], static_cast<int>(i)));
  return mutants;
}

}  // namespace sbflbench

#endif  // SBFLBENCH_MUTATION_HPP
