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

#ifndef SBFLBENCH_PARSER_HPP
#define SBFLBENCH_PARSER_HPP

#include <string>
#include <utility>
#include <vector>

#include "sbflbench/ast.hpp"
#include "sbflbench/lexer.hpp"

namespace sbflbench {

/// Recursive-descent parser for MiniLang. Assigns dense statement ids in
/// source (pre-order) order; block nodes carry no ids. Syntax only --
/// name/type/return-path checks live in check.hpp.
///
/// Grammar sketch:
///   program   := function*
///   function  := 'fn' IDENT '(' [param {',' param}] ')' [':' type] block
///   block     := '{' statement* '}'
///   statement := 'let' IDENT ':' type '=' expr ';'
///              | IDENT '=' expr ';' | IDENT '++' ';' | IDENT '--' ';'
///              | IDENT '(' [expr {',' expr}] ')' ';'
///              | 'if' '(' expr ')' block ['else' (block | if-statement)]
///              | 'while' '(' expr ')' block
///              | 'return' [expr] ';' | ';'
///
/// Expression precedence, loosest first: || < && < == != < relational
/// < additive < multiplicative < unary. All binary operators associate left.
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program parse_program(std::string source_name) {
    Program program;
    program.source_name = std::move(source_name);
    while (!check(TokenKind::EndOfFile)) program.functions.push_back(parse_function());
    program.statement_count = next_id_;
    return program;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool check(TokenKind kind) const { return peek().kind == kind; }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool match(TokenKind kind) {
    if (!check(kind)) return false;
    advance();
    return true;
  }

  const Token& expect(TokenKind kind) {
    if (!check(kind))
      throw ParseError(peek().loc, std::string("expected ") + token_kind_name(kind) + ", found " +
                                       token_kind_name(peek().kind));
    return advance();
  }

  ValueType parse_type() {
    if (match(TokenKind::KwInt)) return ValueType::Int;
    if (match(TokenKind::KwFloat)) return ValueType::Float;
    if (match(TokenKind::KwBool)) return ValueType::Bool;
    throw ParseError(peek().loc, std::string("expected a type ('int', 'float' or 'bool'), found ") +
                                     token_kind_name(peek().kind));
  }

  FunctionDecl parse_function() {
    FunctionDecl fn;
    fn.loc = peek().loc;
    expect(TokenKind::KwFn);
    fn.name = expect(TokenKind::Identifier).text;
    expect(TokenKind::LParen);
    if (!check(TokenKind::RParen)) {
      do {
        Param p;
        p.name = expect(TokenKind::Identifier).text;
        expect(TokenKind::Colon);
        p.type = parse_type();
        fn.params.push_back(std::move(p));
      } while (match(TokenKind::Comma));
    }
    expect(TokenKind::RParen);
    if (match(TokenKind::Colon)) fn.return_type = parse_type();
    fn.body = parse_block();
    return fn;
  }

  Block parse_block() {
    expect(TokenKind::LBrace);
    Block block;
    while (!check(TokenKind::RBrace) && !check(TokenKind::EndOfFile))
      block.stmts.push_back(parse_statement());
    expect(TokenKind::RBrace);
    return block;
  }

  StmtPtr new_stmt(SourceLoc loc) {
    auto s = std::make_unique<Stmt>();
    s->id = next_id_++;
    s->loc = loc;
    return s;
  }

  StmtPtr parse_statement() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::KwLet: return parse_declare();
      case TokenKind::KwIf: return parse_if();
      case TokenKind::KwWhile: return parse_while();
      case TokenKind::KwReturn: return parse_return();
      case TokenKind::Semicolon: {
        auto s = new_stmt(tok.loc);
        advance();
        s->node = NoOpStmt{};
        return s;
      }
      case TokenKind::Identifier: {
        switch (peek(1).kind) {
          case TokenKind::Assign: return parse_assign();
          case TokenKind::PlusPlus:
          case TokenKind::MinusMinus: return parse_incdec();
          case TokenKind::LParen: return parse_call_stmt();
          default:
            throw ParseError(peek(1).loc,
                             std::string("expected '=', '++', '--' or '(' after identifier, found ") +
                                 token_kind_name(peek(1).kind));
        }
      }
      default:
        throw ParseError(tok.loc,
                         std::string("expected a statement, found ") + token_kind_name(tok.kind));
    }
  }

  StmtPtr parse_declare() {
    auto s = new_stmt(peek().loc);
    expect(TokenKind::KwLet);
    DeclareStmt decl;
    decl.name = expect(TokenKind::Identifier).text;
    expect(TokenKind::Colon);
    decl.type = parse_type();
    expect(TokenKind::Assign);
    decl.init = parse_expr();
    expect(TokenKind::Semicolon);
    s->node = std::move(decl);
    return s;
  }

  StmtPtr parse_assign() {
    auto s = new_stmt(peek().loc);
    AssignStmt assign;
    assign.name = expect(TokenKind::Identifier).text;
    expect(TokenKind::Assign);
    assign.value = parse_expr();
    expect(TokenKind::Semicolon);
    s->node = std::move(assign);
    return s;
  }

  StmtPtr parse_incdec() {
    auto s = new_stmt(peek().loc);
    IncDecStmt incdec;
    incdec.name = expect(TokenKind::Identifier).text;
    incdec.increment = check(TokenKind::PlusPlus);
    advance();
    expect(TokenKind::Semicolon);
    s->node = std::move(incdec);
    return s;
  }

  StmtPtr parse_call_stmt() {
    auto s = new_stmt(peek().loc);
    CallStmt call;
    call.call = parse_call_expr();
    expect(TokenKind::Semicolon);
    s->node = std::move(call);
    return s;
  }

  StmtPtr parse_if() {
    auto s = new_stmt(peek().loc);
    expect(TokenKind::KwIf);
    IfStmt ifs;
    expect(TokenKind::LParen);
    ifs.condition = parse_expr();
    expect(TokenKind::RParen);
    ifs.then_body = parse_block();
    if (match(TokenKind::KwElse)) {
      if (check(TokenKind::KwIf)) {
        // `else if` sugars to an else block holding a nested if; the nested
        // statement therefore sits one nesting level deeper.
        Block else_block;
        else_block.stmts.push_back(parse_if());
        ifs.else_body = std::move(else_block);
      } else {
        ifs.else_body = parse_block();
      }
    }
    s->node = std::move(ifs);
    return s;
  }

  StmtPtr parse_while() {
    auto s = new_stmt(peek().loc);
    expect(TokenKind::KwWhile);
    WhileStmt loop;
    expect(TokenKind::LParen);
    loop.condition = parse_expr();
    expect(TokenKind::RParen);
    loop.body = parse_block();
    s->node = std::move(loop);
    return s;
  }

  StmtPtr parse_return() {
    auto s = new_stmt(peek().loc);
    expect(TokenKind::KwReturn);
    ReturnStmt ret;
    if (!check(TokenKind::Semicolon)) ret.value = parse_expr();
    expect(TokenKind::Semicolon);
    s->node = std::move(ret);
    return s;
  }

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    auto lhs = parse_and();
    while (check(TokenKind::OrOr)) {
      const SourceLoc loc = peek().loc;
      advance();
      lhs = make_expr(Expr{BinaryExpr{BinaryOp::Or, std::move(lhs), parse_and()}, loc});
    }
    return lhs;
  }

  ExprPtr parse_and() {
    auto lhs = parse_equality();
    while (check(TokenKind::AndAnd)) {
      const SourceLoc loc = peek().loc;
      advance();
      lhs = make_expr(Expr{BinaryExpr{BinaryOp::And, std::move(lhs), parse_equality()}, loc});
    }
    return lhs;
  }

  ExprPtr parse_equality() {
    auto lhs = parse_comparison();
    while (check(TokenKind::EqEq) || check(TokenKind::NotEq)) {
      const BinaryOp op = check(TokenKind::EqEq) ? BinaryOp::Eq : BinaryOp::Ne;
      const SourceLoc loc = peek().loc;
      advance();
      lhs = make_expr(Expr{BinaryExpr{op, std::move(lhs), parse_comparison()}, loc});
    }
    return lhs;
  }

  ExprPtr parse_comparison() {
    auto lhs = parse_additive();
    while (true) {
      BinaryOp op;
      if (check(TokenKind::Lt)) op = BinaryOp::Lt;
      else if (check(TokenKind::Le)) op = BinaryOp::Le;
      else if (check(TokenKind::Gt)) op = BinaryOp::Gt;
      else if (check(TokenKind::Ge)) op = BinaryOp::Ge;
      else return lhs;
      const SourceLoc loc = peek().loc;
      advance();
      lhs = make_expr(Expr{BinaryExpr{op, std::move(lhs), parse_additive()}, loc});
    }
  }

  ExprPtr parse_additive() {
    auto lhs = parse_multiplicative();
    while (check(TokenKind::Plus) || check(TokenKind::Minus)) {
      const BinaryOp op = check(TokenKind::Plus) ? BinaryOp::Add : BinaryOp::Sub;
      const SourceLoc loc = peek().loc;
      advance();
      lhs = make_expr(Expr{BinaryExpr{op, std::move(lhs), parse_multiplicative()}, loc});
    }
    return lhs;
  }

  ExprPtr parse_multiplicative() {
    auto lhs = parse_unary();
    while (check(TokenKind::Star) || check(TokenKind::Slash) || check(TokenKind::Percent)) {
      const BinaryOp op = check(TokenKind::Star)    ? BinaryOp::Mul
                          : check(TokenKind::Slash) ? BinaryOp::Div
                                                    : BinaryOp::Mod;
      const SourceLoc loc = peek().loc;
      advance();
      lhs = make_expr(Expr{BinaryExpr{op, std::move(lhs), parse_unary()}, loc});
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (check(TokenKind::Minus) || check(TokenKind::Not)) {
      const UnaryOp op = check(TokenKind::Minus) ? UnaryOp::Neg : UnaryOp::Not;
      const SourceLoc loc = peek().loc;
      advance();
      return make_expr(Expr{UnaryExpr{op, parse_unary()}, loc});
    }
    return parse_primary();
  }

  ExprPtr parse_call_expr() {
    const Token& name = expect(TokenKind::Identifier);
    CallExpr call;
    call.callee = name.text;
    expect(TokenKind::LParen);
    if (!check(TokenKind::RParen)) {
      do {
        call.args.push_back(parse_expr());
      } while (match(TokenKind::Comma));
    }
    expect(TokenKind::RParen);
    return make_expr(Expr{std::move(call), name.loc});
  }

  ExprPtr parse_primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::IntLiteral:
        advance();
        return make_expr(Expr{IntLit{tok.int_value}, tok.loc});
      case TokenKind::FloatLiteral:
        advance();
        return make_expr(Expr{FloatLit{tok.float_value}, tok.loc});
      case TokenKind::KwTrue:
        advance();
        return make_expr(Expr{BoolLit{true}, tok.loc});
      case TokenKind::KwFalse:
        advance();
        return make_expr(Expr{BoolLit{false}, tok.loc});
      case TokenKind::Identifier:
        if (peek(1).kind == TokenKind::LParen) return parse_call_expr();
        advance();
        return make_expr(Expr{VarRef{tok.text}, tok.loc});
      case TokenKind::LParen: {
        advance();
        auto inner = parse_expr();
        expect(TokenKind::RParen);
        return inner;
      }
      default:
        throw ParseError(tok.loc,
                         std::string("expected an expression, found ") + token_kind_name(tok.kind));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  StatementId next_id_ = 0;
};

}  // namespace sbflbench

#endif  // SBFLBENCH_PARSER_HPP
