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

#ifndef SBFLBENCH_CHECK_HPP
#define SBFLBENCH_CHECK_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sbflbench/ast.hpp"

namespace sbflbench {

/// Static semantics for MiniLang. Monomorphic, no coercions: every operator
/// requires exact operand types, so a type-correct program stays type-correct
/// under all mutation operators.
///
/// Rules enforced:
///  - function and parameter names unique; variables declared before use
///  - conditions are bool; `%` is int-only; `-` numeric; `!` bool
///  - arithmetic and comparisons need both operands of the same numeric type;
///    == and != additionally accept bool operands
///  - calls match arity and parameter types; void calls only as statements
///  - assignment (and ++/--) targets exist; ++/-- need a numeric variable
///  - every control path of a non-void function ends in `return`
///    (conservative: an if counts only when both arms return; a while never)
class Checker {
 public:
  void check(const Program& program) {
    functions_.clear();
    for (const auto& fn : program.functions) {
      if (!functions_.emplace(fn.name, &fn).second)
        throw ParseError(fn.loc, "duplicate function name '" + fn.name + "'");
    }
    for (const auto& fn : program.functions) check_function(fn);
  }

 private:
  using Scope = std::unordered_map<std::string, ValueType>;

  void check_function(const FunctionDecl& fn) {
    scopes_.clear();
    scopes_.emplace_back();
    current_ = &fn;
    for (const auto& p : fn.params) {
      if (scopes_.back().count(p.name))
        throw ParseError(fn.loc, "duplicate parameter name '" + p.name + "' in function '" +
                                     fn.name + "'");
      scopes_.back().emplace(p.name, p.type);
    }
    check_block(fn.body, /*new_scope=*/false);
    if (fn.return_type && !always_returns(fn.body))
      throw ParseError(fn.loc, "function '" + fn.name +
                                   "' may reach the end of its body without returning a value");
  }

  void check_block(const Block& block, bool new_scope = true) {
    if (new_scope) scopes_.emplace_back();
    for (const auto& stmt : block.stmts) check_stmt(*stmt);
    if (new_scope) scopes_.pop_back();
  }

  void check_stmt(const Stmt& stmt) {
    if (const auto* d = std::get_if<DeclareStmt>(&stmt.node)) {
      const ValueType init_type = check_expr_value(*d->init);
      if (init_type != d->type)
        throw ParseError(stmt.loc, "cannot initialize '" + d->name + "' of type " +
                                       to_string(d->type) + " with a value of type " +
                                       to_string(init_type));
      if (scopes_.back().count(d->name))
        throw ParseError(stmt.loc, "redeclaration of '" + d->name + "' in the same scope");
      scopes_.back().emplace(d->name, d->type);
    } else if (const auto* a = std::get_if<AssignStmt>(&stmt.node)) {
      const ValueType var_type = lookup(a->name, stmt.loc);
      const ValueType value_type = check_expr_value(*a->value);
      if (var_type != value_type)
        throw ParseError(stmt.loc, "cannot assign a value of type " + std::string(to_string(value_type)) +
                                       " to '" + a->name + "' of type " + to_string(var_type));
    } else if (const auto* i = std::get_if<IncDecStmt>(&stmt.node)) {
      const ValueType t = lookup(i->name, stmt.loc);
      if (t == ValueType::Bool)
        throw ParseError(stmt.loc, std::string("'") + (i->increment ? "++" : "--") +
                                       "' requires a numeric variable, '" + i->name + "' is bool");
    } else if (const auto* f = std::get_if<IfStmt>(&stmt.node)) {
      require_bool(*f->condition, "if condition");
      check_block(f->then_body);
      if (f->else_body) check_block(*f->else_body);
    } else if (const auto* w = std::get_if<WhileStmt>(&stmt.node)) {
      require_bool(*w->condition, "while condition");
      check_block(w->body);
    } else if (const auto* c = std::get_if<CallStmt>(&stmt.node)) {
      check_call(std::get<CallExpr>(c->call->node), c->call->loc);  // result may be discarded
    } else if (const auto* r = std::get_if<ReturnStmt>(&stmt.node)) {
      if (!current_->return_type) {
        if (r->value)
          throw ParseError(stmt.loc,
                           "void function '" + current_->name + "' cannot return a value");
      } else {
        if (!r->value)
          throw ParseError(stmt.loc, "function '" + current_->name + "' must return a value of type " +
                                         to_string(*current_->return_type));
        const ValueType t = check_expr_value(*r->value);
        if (t != *current_->return_type)
          throw ParseError(stmt.loc, "return type mismatch in '" + current_->name + "': expected " +
                                         to_string(*current_->return_type) + ", got " + to_string(t));
      }
    }
    // NoOpStmt: nothing to check.
  }

  // Type of an expression that must produce a value (rejects void calls).
  ValueType check_expr_value(const Expr& expr) {
    const std::optional<ValueType> t = check_expr(expr);
    if (!t) {
      const auto& call = std::get<CallExpr>(expr.node);
      throw ParseError(expr.loc, "call to void function '" + call.callee +
                                     "' cannot be used as a value");
    }
    return *t;
  }

  std::optional<ValueType> check_expr(const Expr& expr) {
    if (std::holds_alternative<IntLit>(expr.node)) return ValueType::Int;
    if (std::holds_alternative<FloatLit>(expr.node)) return ValueType::Float;
    if (std::holds_alternative<BoolLit>(expr.node)) return ValueType::Bool;
    if (const auto* v = std::get_if<VarRef>(&expr.node)) return lookup(v->name, expr.loc);
    if (const auto* u = std::get_if<UnaryExpr>(&expr.node)) {
      const ValueType t = check_expr_value(*u->operand);
      if (u->op == UnaryOp::Neg) {
        if (t == ValueType::Bool)
          throw ParseError(expr.loc, "unary '-' requires a numeric operand, got bool");
        return t;
      }
      if (t != ValueType::Bool)
        throw ParseError(expr.loc, std::string("'!' requires a bool operand, got ") + to_string(t));
      return ValueType::Bool;
    }
    if (const auto* b = std::get_if<BinaryExpr>(&expr.node)) return check_binary(*b, expr.loc);
    return check_call(std::get<CallExpr>(expr.node), expr.loc);
  }

  ValueType check_binary(const BinaryExpr& b, SourceLoc loc) {
    const ValueType lhs = check_expr_value(*b.lhs);
    const ValueType rhs = check_expr_value(*b.rhs);
    if (lhs != rhs)
      throw ParseError(loc, std::string("operand type mismatch for '") + to_string(b.op) + "': " +
                                to_string(lhs) + " vs " + to_string(rhs));
    switch (b.op) {
      case BinaryOp::Add:
      case BinaryOp::Sub:
      case BinaryOp::Mul:
      case BinaryOp::Div:
        if (lhs == ValueType::Bool)
          throw ParseError(loc, std::string("'") + to_string(b.op) + "' requires numeric operands");
        return lhs;
      case BinaryOp::Mod:
        if (lhs != ValueType::Int)
          throw ParseError(loc, "'%' requires int operands");
        return ValueType::Int;
      case BinaryOp::Lt:
      case BinaryOp::Le:
      case BinaryOp::Gt:
      case BinaryOp::Ge:
        if (lhs == ValueType::Bool)
          throw ParseError(loc, std::string("'") + to_string(b.op) + "' requires numeric operands");
        return ValueType::Bool;
      case BinaryOp::Eq:
      case BinaryOp::Ne:
        return ValueType::Bool;
      case BinaryOp::And:
      case BinaryOp::Or:
        if (lhs != ValueType::Bool)
          throw ParseError(loc, std::string("'") + to_string(b.op) + "' requires bool operands");
        return ValueType::Bool;
    }
    return lhs;
  }

  std::optional<ValueType> check_call(const CallExpr& call, SourceLoc loc) {
    const auto it = functions_.find(call.callee);
    if (it == functions_.end())
      throw ParseError(loc, "call to undefined function '" + call.callee + "'");
    const FunctionDecl& callee = *it->second;
    if (call.args.size() != callee.params.size())
      throw ParseError(loc, "function '" + call.callee + "' takes " +
                                std::to_string(callee.params.size()) + " argument(s), got " +
                                std::to_string(call.args.size()));
    for (std::size_t i = 0; i < call.args.size(); ++i) {
      const ValueType got = check_expr_value(*call.args[i]);
      if (got != callee.params[i].type)
        throw ParseError(call.args[i]->loc,
                         "argument " + std::to_string(i + 1) + " of '" + call.callee +
                             "' expects " + to_string(callee.params[i].type) + ", got " +
                             to_string(got));
    }
    return callee.return_type;
  }

  ValueType lookup(const std::string& name, SourceLoc loc) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      const auto found = it->find(name);
      if (found != it->end()) return found->second;
    }
    throw ParseError(loc, "undefined identifier '" + name + "'");
  }

  void require_bool(const Expr& expr, const char* what) {
    const ValueType t = check_expr_value(expr);
    if (t != ValueType::Bool)
      throw ParseError(expr.loc, std::string(what) + " must be bool, got " + to_string(t));
  }

  static bool always_returns(const Block& block) {
    for (const auto& stmt : block.stmts)
      if (always_returns(*stmt)) return true;
    return false;
  }

  static bool always_returns(const Stmt& stmt) {
    if (std::holds_alternative<ReturnStmt>(stmt.node)) return true;
    if (const auto* f = std::get_if<IfStmt>(&stmt.node))
      return f->else_body && always_returns(f->then_body) && always_returns(*f->else_body);
    return false;
  }

  std::unordered_map<std::string, const FunctionDecl*> functions_;
  std::vector<Scope> scopes_;
  const FunctionDecl* current_ = nullptr;
};

inline void check_program(const Program& program) { Checker{}.check(program); }

}  // namespace sbflbench

#endif  // SBFLBENCH_CHECK_HPP
