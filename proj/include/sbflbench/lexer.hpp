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

#ifndef SBFLBENCH_LEXER_HPP
#define SBFLBENCH_LEXER_HPP

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sbflbench/diagnostics.hpp"

namespace sbflbench {

enum class TokenKind {
  Identifier,
  IntLiteral,
  FloatLiteral,
  KwFn,
  KwLet,
  KwIf,
  KwElse,
  KwWhile,
  KwReturn,
  KwTrue,
  KwFalse,
  KwInt,
  KwFloat,
  KwBool,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Colon,
  Semicolon,
  Comma,
  Plus,
  Minus,
  Star,
  Slash,
  Percent,
  Lt,
  Le,
  Gt,
  Ge,
  EqEq,
  NotEq,
  AndAnd,
  OrOr,
  Not,
  Assign,
  PlusPlus,
  MinusMinus,
  EndOfFile,
};

inline const char* token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::IntLiteral: return "integer literal";
    case TokenKind::FloatLiteral: return "float literal";
    case TokenKind::KwFn: return "'fn'";
    case TokenKind::KwLet: return "'let'";
    case TokenKind::KwIf: return "'if'";
    case TokenKind::KwElse: return "'else'";
    case TokenKind::KwWhile: return "'while'";
    case TokenKind::KwReturn: return "'return'";
    case TokenKind::KwTrue: return "'true'";
    case TokenKind::KwFalse: return "'false'";
    case TokenKind::KwInt: return "'int'";
    case TokenKind::KwFloat: return "'float'";
    case TokenKind::KwBool: return "'bool'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Percent: return "'%'";
    case TokenKind::Lt: return "'<'";
    case TokenKind::Le: return "'<='";
    case TokenKind::Gt: return "'>'";
    case TokenKind::Ge: return "'>='";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::NotEq: return "'!='";
    case TokenKind::AndAnd: return "'&&'";
    case TokenKind::OrOr: return "'||'";
    case TokenKind::Not: return "'!'";
    case TokenKind::Assign: return "'='";
    case TokenKind::PlusPlus: return "'++'";
    case TokenKind::MinusMinus: return "'--'";
    case TokenKind::EndOfFile: return "end of input";
  }
  return "?";
}

struct Token {
  TokenKind kind;
  std::string text;
  SourceLoc loc;
  std::int64_t int_value = 0;
  double float_value = 0.0;
};

/// Tokenizes MiniLang source. `//` starts a line comment. Float literals
/// need a '.' or exponent to distinguish them from integers.
class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> tokenize() {
    std::vector<Token> tokens;
    while (true) {
      skip_trivia();
      const SourceLoc loc{line_, column_};
      if (at_end()) {
        tokens.push_back(Token{TokenKind::EndOfFile, "", loc});
        return tokens;
      }
      const char c = peek();
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        tokens.push_back(lex_word(loc));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        tokens.push_back(lex_number(loc));
      } else {
        tokens.push_back(lex_operator(loc));
      }
    }
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_trivia() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token lex_word(SourceLoc loc) {
    std::string text;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      text.push_back(advance());
    TokenKind kind = TokenKind::Identifier;
    if (text == "fn") kind = TokenKind::KwFn;
    else if (text == "let") kind = TokenKind::KwLet;
    else if (text == "if") kind = TokenKind::KwIf;
    else if (text == "else") kind = TokenKind::KwElse;
    else if (text == "while") kind = TokenKind::KwWhile;
    else if (text == "return") kind = TokenKind::KwReturn;
    else if (text == "true") kind = TokenKind::KwTrue;
    else if (text == "false") kind = TokenKind::KwFalse;
    else if (text == "int") kind = TokenKind::KwInt;
    else if (text == "float") kind = TokenKind::KwFloat;
    else if (text == "bool") kind = TokenKind::KwBool;
    return Token{kind, std::move(text), loc};
  }

  Token lex_number(SourceLoc loc) {
    std::string text;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) text.push_back(advance());
    bool is_float = false;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      is_float = true;
      text.push_back(advance());
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) text.push_back(advance());
    }
    if (peek() == 'e' || peek() == 'E') {
      const char sign = peek(1);
      const char first = (sign == '+' || sign == '-') ? peek(2) : sign;
      if (std::isdigit(static_cast<unsigned char>(first))) {
        is_float = true;
        text.push_back(advance());
        if (peek() == '+' || peek() == '-') text.push_back(advance());
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) text.push_back(advance());
      }
    }
    Token token{is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, text, loc};
    if (is_float) {
      const auto result =
          std::from_chars(text.data(), text.data() + text.size(), token.float_value);
      if (result.ec != std::errc{} || result.ptr != text.data() + text.size())
        throw ParseError(loc, "invalid float literal '" + text + "'");
    } else {
      const auto result = std::from_chars(text.data(), text.data() + text.size(), token.int_value);
      if (result.ec != std::errc{} || result.ptr != text.data() + text.size())
        throw ParseError(loc, "integer literal out of range '" + text + "'");
    }
    return token;
  }

  Token lex_operator(SourceLoc loc) {
    const char c = advance();
    const auto two = [&](char second, TokenKind with, TokenKind without) {
      if (peek() == second) {
        advance();
        return Token{with, std::string{c, second}, loc};
      }
      return Token{without, std::string{c}, loc};
    };
    switch (c) {
      case '(': return Token{TokenKind::LParen, "(", loc};
      case ')': return Token{TokenKind::RParen, ")", loc};
      case '{': return Token{TokenKind::LBrace, "{", loc};
      case '}': return Token{TokenKind::RBrace, "}", loc};
      case ':': return Token{TokenKind::Colon, ":", loc};
      case ';': return Token{TokenKind::Semicolon, ";", loc};
      case ',': return Token{TokenKind::Comma, ",", loc};
      case '+': return two('+', TokenKind::PlusPlus, TokenKind::Plus);
      case '-': return two('-', TokenKind::MinusMinus, TokenKind::Minus);
      case '*': return Token{TokenKind::Star, "*", loc};
      case '/': return Token{TokenKind::Slash, "/", loc};
      case '%': return Token{TokenKind::Percent, "%", loc};
      case '<': return two('=', TokenKind::Le, TokenKind::Lt);
      case '>': return two('=', TokenKind::Ge, TokenKind::Gt);
      case '=': return two('=', TokenKind::EqEq, TokenKind::Assign);
      case '!': return two('=', TokenKind::NotEq, TokenKind::Not);
      case '&':
        if (peek() == '&') {
          advance();
          return Token{TokenKind::AndAnd, "&&", loc};
        }
        throw ParseError(loc, "unexpected character '&' (did you mean '&&'?)");
      case '|':
        if (peek() == '|') {
          advance();
          return Token{TokenKind::OrOr, "||", loc};
        }
        throw ParseError(loc, "unexpected character '|' (did you mean '||'?)");
      default:
        throw ParseError(loc, std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace sbflbench

#endif  // SBFLBENCH_LEXER_HPP
