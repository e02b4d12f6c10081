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

#ifndef SBFLBENCH_AST_HPP
#define SBFLBENCH_AST_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sbflbench/diagnostics.hpp"

namespace sbflbench {

// Statement ids are dense, assigned in source (pre-order) order by the
// parser. Block nodes do not carry ids; only executable statements do.
using StatementId = std::int32_t;
using BranchId = std::int32_t;

enum class ValueType { Int, Float, Bool };

inline const char* to_string(ValueType t) {
  switch (t) {
    case ValueType::Int: return "int";
    case ValueType::Float: return "float";
    case ValueType::Bool: return "bool";
  }
  return "?";
}

enum class UnaryOp { Neg, Not };
enum class BinaryOp { Add, Sub, Mul, Div, Mod, Lt, Le, Gt, Ge, Eq, Ne, And, Or };

inline const char* to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

//===----------------------------------------------------------------------===//
// Expressions
//===----------------------------------------------------------------------===//

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct IntLit {
  std::int64_t value = 0;
};
struct FloatLit {
  double value = 0.0;
};
struct BoolLit {
  bool value = false;
};
struct VarRef {
  std::string name;
};
struct UnaryExpr {
  UnaryOp op;
  ExprPtr operand;
};
struct BinaryExpr {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct CallExpr {
  std::string callee;
  std::vector<ExprPtr> args;
};

struct Expr {
  std::variant<IntLit, FloatLit, BoolLit, VarRef, UnaryExpr, BinaryExpr, CallExpr> node;
  SourceLoc loc;
};

inline ExprPtr make_expr(Expr e) { return std::make_unique<Expr>(std::move(e)); }

/// Number of child expressions (0 for leaves, 1 for unary, 2 for binary,
/// argument count for calls). Children are indexed in evaluation order.
inline int expr_child_count(const Expr& e) {
  if (std::holds_alternative<UnaryExpr>(e.node)) return 1;
  if (std::holds_alternative<BinaryExpr>(e.node)) return 2;
  if (const auto* call = std::get_if<CallExpr>(&e.node))
    return static_cast<int>(call->args.size());
  return 0;
}

inline Expr* expr_child(Expr& e, int index) {
  if (auto* u = std::get_if<UnaryExpr>(&e.node)) return index == 0 ? u->operand.get() : nullptr;
  if (auto* b = std::get_if<BinaryExpr>(&e.node)) {
    if (index == 0) return b->lhs.get();
    if (index == 1) return b->rhs.get();
    return nullptr;
  }
  if (auto* c = std::get_if<CallExpr>(&e.node)) {
    if (index >= 0 && index < static_cast<int>(c->args.size())) return c->args[index].get();
    return nullptr;
  }
  return nullptr;
}

inline const Expr* expr_child(const Expr& e, int index) {
  return expr_child(const_cast<Expr&>(e), index);
}

//===----------------------------------------------------------------------===//
// Statements
//===----------------------------------------------------------------------===//

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Block {
  std::vector<StmtPtr> stmts;
};

struct DeclareStmt {
  std::string name;
  ValueType type;
  ExprPtr init;
};
struct AssignStmt {
  std::string name;
  ExprPtr value;
};
struct IncDecStmt {
  std::string name;
  bool increment = true;  // false: `x--`
};
struct IfStmt {
  ExprPtr condition;
  Block then_body;
  std::optional<Block> else_body;
};
struct WhileStmt {
  ExprPtr condition;
  Block body;
};
struct CallStmt {
  ExprPtr call;  // always holds a CallExpr
};
struct ReturnStmt {
  ExprPtr value;  // null for bare `return;`
};
// Placeholder produced by the VoidMethodCalls mutation operator (and parsed
// from a bare `;`). Executes as a no-op but keeps its statement id.
struct NoOpStmt {};

struct Stmt {
  StatementId id = -1;
  SourceLoc loc;
  std::variant<DeclareStmt, AssignStmt, IncDecStmt, IfStmt, WhileStmt, CallStmt, ReturnStmt, NoOpStmt> node;
};

enum class StatementKind { Declare, Assign, Increment, Decrement, If, While, Call, Return, NoOp };

inline const char* to_string(StatementKind k) {
  switch (k) {
    case StatementKind::Declare: return "declare";
    case StatementKind::Assign: return "assign";
    case StatementKind::Increment: return "increment";
    case StatementKind::Decrement: return "decrement";
    case StatementKind::If: return "if";
    case StatementKind::While: return "while";
    case StatementKind::Call: return "expression-call";
    case StatementKind::Return: return "return";
    case StatementKind::NoOp: return "noop";
  }
  return "?";
}

inline StatementKind kind_of(const Stmt& s) {
  struct Visitor {
    StatementKind operator()(const DeclareStmt&) const { return StatementKind::Declare; }
    StatementKind operator()(const AssignStmt&) const { return StatementKind::Assign; }
    StatementKind operator()(const IncDecStmt& i) const {
      return i.increment ? StatementKind::Increment : StatementKind::Decrement;
    }
    StatementKind operator()(const IfStmt&) const { return StatementKind::If; }
    StatementKind operator()(const WhileStmt&) const { return StatementKind::While; }
    StatementKind operator()(const CallStmt&) const { return StatementKind::Call; }
    StatementKind operator()(const ReturnStmt&) const { return StatementKind::Return; }
    StatementKind operator()(const NoOpStmt&) const { return StatementKind::NoOp; }
  };
  return std::visit(Visitor{}, s.node);
}

/// Expression roots owned directly by a statement, in evaluation order.
/// A mutation site path starts with an index into this list.
inline std::vector<Expr*> stmt_expr_roots(Stmt& s) {
  std::vector<Expr*> roots;
  if (auto* d = std::get_if<DeclareStmt>(&s.node)) roots.push_back(d->init.get());
  else if (auto* a = std::get_if<AssignStmt>(&s.node)) roots.push_back(a->value.get());
  else if (auto* i = std::get_if<IfStmt>(&s.node)) roots.push_back(i->condition.get());
  else if (auto* w = std::get_if<WhileStmt>(&s.node)) roots.push_back(w->condition.get());
  else if (auto* c = std::get_if<CallStmt>(&s.node)) roots.push_back(c->call.get());
  else if (auto* r = std::get_if<ReturnStmt>(&s.node)) {
    if (r->value) roots.push_back(r->value.get());
  }
  return roots;
}

inline std::vector<const Expr*> stmt_expr_roots(const Stmt& s) {
  auto mut = stmt_expr_roots(const_cast<Stmt&>(s));
  return std::vector<const Expr*>(mut.begin(), mut.end());
}

//===----------------------------------------------------------------------===//
// Functions and programs
//===----------------------------------------------------------------------===//

struct Param {
  std::string name;
  ValueType type;
};

struct FunctionDecl {
  std::string name;
  std::vector<Param> params;
  std::optional<ValueType> return_type;  // nullopt: void
  Block body;
  SourceLoc loc;
};

struct Program {
  std::string source_name;
  std::vector<FunctionDecl> functions;
  int statement_count = 0;

  const FunctionDecl* find_function(std::string_view name) const {
    for (const auto& f : functions)
      if (f.name == name) return &f;
    return nullptr;
  }
};

//===----------------------------------------------------------------------===//
// Deep copy (ids and locations preserved)
//===----------------------------------------------------------------------===//

ExprPtr clone_expr(const Expr& e);
StmtPtr clone_stmt(const Stmt& s);

inline Block clone_block(const Block& b) {
  Block out;
  out.stmts.reserve(b.stmts.size());
  for (const auto& s : b.stmts) out.stmts.push_back(clone_stmt(*s));
  return out;
}

inline ExprPtr clone_expr(const Expr& e) {
  Expr out;
  out.loc = e.loc;
  std::visit(
      [&out](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, UnaryExpr>) {
          out.node = UnaryExpr{node.op, clone_expr(*node.operand)};
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          out.node = BinaryExpr{node.op, clone_expr(*node.lhs), clone_expr(*node.rhs)};
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          CallExpr call;
          call.callee = node.callee;
          call.args.reserve(node.args.size());
          for (const auto& a : node.args) call.args.push_back(clone_expr(*a));
          out.node = std::move(call);
        } else {
          out.node = node;
        }
      },
      e.node);
  return make_expr(std::move(out));
}

inline StmtPtr clone_stmt(const Stmt& s) {
  auto out = std::make_unique<Stmt>();
  out->id = s.id;
  out->loc = s.loc;
  std::visit(
      [&out](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, DeclareStmt>) {
          out->node = DeclareStmt{node.name, node.type, clone_expr(*node.init)};
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          out->node = AssignStmt{node.name, clone_expr(*node.value)};
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          IfStmt ifs;
          ifs.condition = clone_expr(*node.condition);
          ifs.then_body = clone_block(node.then_body);
          if (node.else_body) ifs.else_body = clone_block(*node.else_body);
          out->node = std::move(ifs);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          out->node = WhileStmt{clone_expr(*node.condition), clone_block(node.body)};
        } else if constexpr (std::is_same_v<T, CallStmt>) {
          out->node = CallStmt{clone_expr(*node.call)};
        } else if constexpr (std::is_same_v<T, ReturnStmt>) {
          out->node = ReturnStmt{node.value ? clone_expr(*node.value) : nullptr};
        } else {
          out->node = node;
        }
      },
      s.node);
  return out;
}

inline Program clone_program(const Program& p) {
  Program out;
  out.source_name = p.source_name;
  out.statement_count = p.statement_count;
  out.functions.reserve(p.functions.size());
  for (const auto& f : p.functions) {
    FunctionDecl fd;
    fd.name = f.name;
    fd.params = f.params;
    fd.return_type = f.return_type;
    fd.body = clone_block(f.body);
    fd.loc = f.loc;
    out.functions.push_back(std::move(fd));
  }
  return out;
}

//===----------------------------------------------------------------------===//
// Structural equality (ignores source locations, compares ids)
//===----------------------------------------------------------------------===//

bool structurally_equal(const Stmt& a, const Stmt& b);

inline bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* ai = std::get_if<IntLit>(&a.node))
    return ai->value == std::get<IntLit>(b.node).value;
  if (const auto* af = std::get_if<FloatLit>(&a.node)) {
    const double bv = std::get<FloatLit>(b.node).value;
    return af->value == bv;  // exact; literals never hold NaN
  }
  if (const auto* ab = std::get_if<BoolLit>(&a.node))
    return ab->value == std::get<BoolLit>(b.node).value;
  if (const auto* av = std::get_if<VarRef>(&a.node))
    return av->name == std::get<VarRef>(b.node).name;
  if (const auto* au = std::get_if<UnaryExpr>(&a.node)) {
    const auto& bu = std::get<UnaryExpr>(b.node);
    return au->op == bu.op && structurally_equal(*au->operand, *bu.operand);
  }
  if (const auto* abin = std::get_if<BinaryExpr>(&a.node)) {
    const auto& bbin = std::get<BinaryExpr>(b.node);
    return abin->op == bbin.op && structurally_equal(*abin->lhs, *bbin.lhs) &&
           structurally_equal(*abin->rhs, *bbin.rhs);
  }
  const auto& ac = std::get<CallExpr>(a.node);
  const auto& bc = std::get<CallExpr>(b.node);
  if (ac.callee != bc.callee || ac.args.size() != bc.args.size()) return false;
  for (std::size_t i = 0; i < ac.args.size(); ++i)
    if (!structurally_equal(*ac.args[i], *bc.args[i])) return false;
  return true;
}

inline bool structurally_equal(const Block& a, const Block& b) {
  if (a.stmts.size() != b.stmts.size()) return false;
  for (std::size_t i = 0; i < a.stmts.size(); ++i)
    if (!structurally_equal(*a.stmts[i], *b.stmts[i])) return false;
  return true;
}

inline bool structurally_equal(const Stmt& a, const Stmt& b) {
  if (a.id != b.id || a.node.index() != b.node.index()) return false;
  if (const auto* ad = std::get_if<DeclareStmt>(&a.node)) {
    const auto& bd = std::get<DeclareStmt>(b.node);
    return ad->name == bd.name && ad->type == bd.type && structurally_equal(*ad->init, *bd.init);
  }
  if (const auto* aa = std::get_if<AssignStmt>(&a.node)) {
    const auto& ba = std::get<AssignStmt>(b.node);
    return aa->name == ba.name && structurally_equal(*aa->value, *ba.value);
  }
  if (const auto* ai = std::get_if<IncDecStmt>(&a.node)) {
    const auto& bi = std::get<IncDecStmt>(b.node);
    return ai->name == bi.name && ai->increment == bi.increment;
  }
  if (const auto* aif = std::get_if<IfStmt>(&a.node)) {
    const auto& bif = std::get<IfStmt>(b.node);
    if (!structurally_equal(*aif->condition, *bif.condition)) return false;
    if (!structurally_equal(aif->then_body, bif.then_body)) return false;
    if (aif->else_body.has_value() != bif.else_body.has_value()) return false;
    return !aif->else_body || structurally_equal(*aif->else_body, *bif.else_body);
  }
  if (const auto* aw = std::get_if<WhileStmt>(&a.node)) {
    const auto& bw = std::get<WhileStmt>(b.node);
    return structurally_equal(*aw->condition, *bw.condition) &&
           structurally_equal(aw->body, bw.body);
  }
  if (const auto* ac = std::get_if<CallStmt>(&a.node))
    return structurally_equal(*ac->call, *std::get<CallStmt>(b.node).call);
  if (const auto* ar = std::get_if<ReturnStmt>(&a.node)) {
    const auto& br = std::get<ReturnStmt>(b.node);
    if ((ar->value == nullptr) != (br.value == nullptr)) return false;
    return !ar->value || structurally_equal(*ar->value, *br.value);
  }
  return true;  // NoOpStmt
}

inline bool structurally_equal(const FunctionDecl& a, const FunctionDecl& b) {
  if (a.name != b.name || a.return_type != b.return_type || a.params.size() != b.params.size())
    return false;
  for (std::size_t i = 0; i < a.params.size(); ++i)
    if (a.params[i].name != b.params[i].name || a.params[i].type != b.params[i].type) return false;
  return structurally_equal(a.body, b.body);
}

inline bool structurally_equal(const Program& a, const Program& b) {
  if (a.functions.size() != b.functions.size()) return false;
  for (std::size_t i = 0; i < a.functions.size(); ++i)
    if (!structurally_equal(a.functions[i], b.functions[i])) return false;
  return true;
}

}  // namespace sbflbench

#endif  // SBFLBENCH_AST_HPP
