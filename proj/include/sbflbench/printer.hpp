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

#ifndef SBFLBENCH_PRINTER_HPP
#define SBFLBENCH_PRINTER_HPP

#include <charconv>
#include <string>

#include "sbflbench/ast.hpp"

namespace sbflbench {

/// Shortest round-trip rendering of a float literal, always re-lexable as a
/// float (a '.' or exponent is guaranteed).
inline std::string format_float_literal(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  std::string text(buf, res.ptr);
  if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
      text.find('E') == std::string::npos)
    text += ".0";
  return text;
}

namespace detail {

inline int precedence_of(const Expr& e) {
  if (const auto* b = std::get_if<BinaryExpr>(&e.node)) {
    switch (b->op) {
      case BinaryOp::Or: return 1;
      case BinaryOp::And: return 2;
      case BinaryOp::Eq:
      case BinaryOp::Ne: return 3;
      case BinaryOp::Lt:
      case BinaryOp::Le:
      case BinaryOp::Gt:
      case BinaryOp::Ge: return 4;
      case BinaryOp::Add:
      case BinaryOp::Sub: return 5;
      case BinaryOp::Mul:
      case BinaryOp::Div:
      case BinaryOp::Mod: return 6;
    }
  }
  if (std::holds_alternative<UnaryExpr>(e.node)) return 7;
  return 8;  // literals, variables, calls
}

inline void print_expr_to(const Expr& e, std::string& out) {
  if (const auto* i = std::get_if<IntLit>(&e.node)) {
    out += std::to_string(i->value);
  } else if (const auto* f = std::get_if<FloatLit>(&e.node)) {
    out += format_float_literal(f->value);
  } else if (const auto* b = std::get_if<BoolLit>(&e.node)) {
    out += b->value ? "true" : "false";
  } else if (const auto* v = std::get_if<VarRef>(&e.node)) {
    out += v->name;
  } else if (const auto* u = std::get_if<UnaryExpr>(&e.node)) {
    out += u->op == UnaryOp::Neg ? "-" : "!";
    // Parenthesize binary operands, and a negated negation (so `-` `-` does
    // not lex as `--`).
    const bool parens = precedence_of(*u->operand) < 7 ||
                        (u->op == UnaryOp::Neg &&
                         std::holds_alternative<UnaryExpr>(u->operand->node) &&
                         std::get<UnaryExpr>(u->operand->node).op == UnaryOp::Neg);
    if (parens) out += '(';
    print_expr_to(*u->operand, out);
    if (parens) out += ')';
  } else if (const auto* bin = std::get_if<BinaryExpr>(&e.node)) {
    const int prec = precedence_of(e);
    const bool lhs_parens = precedence_of(*bin->lhs) < prec;
    const bool rhs_parens = precedence_of(*bin->rhs) <= prec;  // binary ops associate left
    if (lhs_parens) out += '(';
    print_expr_to(*bin->lhs, out);
    if (lhs_parens) out += ')';
    out += ' ';
    out += to_string(bin->op);
    out += ' ';
    if (rhs_parens) out += '(';
    print_expr_to(*bin->rhs, out);
    if (rhs_parens) out += ')';
  } else {
    const auto& call = std::get<CallExpr>(e.node);
    out += call.callee;
    out += '(';
    for (std::size_t i = 0; i < call.args.size(); ++i) {
      if (i) out += ", ";
      print_expr_to(*call.args[i], out);
    }
    out += ')';
  }
}

inline void print_block_to(const Block& block, std::string& out, int indent);

inline void print_stmt_to(const Stmt& stmt, std::string& out, int indent) {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  if (const auto* d = std::get_if<DeclareStmt>(&stmt.node)) {
    out += "let " + d->name + ": " + to_string(d->type) + " = ";
    print_expr_to(*d->init, out);
    out += ";\n";
  } else if (const auto* a = std::get_if<AssignStmt>(&stmt.node)) {
    out += a->name + " = ";
    print_expr_to(*a->value, out);
    out += ";\n";
  } else if (const auto* i = std::get_if<IncDecStmt>(&stmt.node)) {
    out += i->name;
    out += i->increment ? "++;\n" : "--;\n";
  } else if (const auto* f = std::get_if<IfStmt>(&stmt.node)) {
    out += "if (";
    print_expr_to(*f->condition, out);
    out += ") {\n";
    print_block_to(f->then_body, out, indent + 1);
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    if (f->else_body) {
      out += "} else {\n";
      print_block_to(*f->else_body, out, indent + 1);
      out.append(static_cast<std::size_t>(indent) * 2, ' ');
    }
    out += "}\n";
  } else if (const auto* w = std::get_if<WhileStmt>(&stmt.node)) {
    out += "while (";
    print_expr_to(*w->condition, out);
    out += ") {\n";
    print_block_to(w->body, out, indent + 1);
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out += "}\n";
  } else if (const auto* c = std::get_if<CallStmt>(&stmt.node)) {
    print_expr_to(*c->call, out);
    out += ";\n";
  } else if (const auto* r = std::get_if<ReturnStmt>(&stmt.node)) {
    out += "return";
    if (r->value) {
      out += ' ';
      print_expr_to(*r->value, out);
    }
    out += ";\n";
  } else {
    out += ";\n";  // NoOpStmt
  }
}

inline void print_block_to(const Block& block, std::string& out, int indent) {
  for (const auto& stmt : block.stmts) print_stmt_to(*stmt, out, indent);
}

}  // namespace detail

inline std::string pretty_print(const Expr& expr) {
  std::string out;
  detail::print_expr_to(expr, out);
  return out;
}

/// Single statement on one line (bodies of if/while elided as `{ ... }`);
/// used for mutation descriptions and diagnostics.
inline std::string statement_text(const Stmt& stmt) {
  if (const auto* f = std::get_if<IfStmt>(&stmt.node)) {
    std::string out = "if (";
    detail::print_expr_to(*f->condition, out);
    out += ") { ... }";
    return out;
  }
  if (const auto* w = std::get_if<WhileStmt>(&stmt.node)) {
    std::string out = "while (";
    detail::print_expr_to(*w->condition, out);
    out += ") { ... }";
    return out;
  }
  std::string out;
  detail::print_stmt_to(stmt, out, 0);
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

/// Canonical rendering: two-space indent, one statement per line, blank line
/// between functions. parse(pretty_print(p)) reproduces p structurally.
inline std::string pretty_print(const Program& program) {
  std::string out;
  bool first = true;
  for (const auto& fn : program.functions) {
    if (!first) out += '\n';
    first = false;
    out += "fn " + fn.name + "(";
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      if (i) out += ", ";
      out += fn.params[i].name + ": " + to_string(fn.params[i].type);
    }
    out += ")";
    if (fn.return_type) out += std::string(": ") + to_string(*fn.return_type);
    out += " {\n";
    detail::print_block_to(fn.body, out, 1);
    out += "}\n";
  }
  return out;
}

}  // namespace sbflbench

#endif  // SBFLBENCH_PRINTER_HPP
