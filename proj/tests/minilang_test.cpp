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

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "sbflbench/minilang.hpp"
#include "test_util.hpp"

namespace sbflbench {
namespace {

using testing::RandomProgramGen;
using testing::corpus_program_names;
using testing::load_corpus;
using testing::renumber_statements;

TEST(Parse, MinimalProgram) {
  const Program p = parse("fn f(a: int): int { return 5; }");
  ASSERT_EQ(p.functions.size(), 1u);
  EXPECT_EQ(p.functions[0].name, "f");
  ASSERT_EQ(p.functions[0].body.stmts.size(), 1u);
  EXPECT_EQ(kind_of(*p.functions[0].body.stmts[0]), StatementKind::Return);
  EXPECT_EQ(p.statement_count, 1);
}

TEST(Parse, MissingReturnOnSomePath) {
  EXPECT_THROW(parse("fn f(): int { }"), ParseError);
  EXPECT_THROW(parse("fn f(a: int): int { if (a > 0) { return 1; } }"), ParseError);
  // Both arms returning satisfies the conservative check.
  EXPECT_NO_THROW(parse("fn f(a: int): int { if (a > 0) { return 1; } else { return 0; } }"));
  // A while body never counts as a guaranteed return.
  EXPECT_THROW(parse("fn f(a: int): int { while (a > 0) { return 1; } }"), ParseError);
}

TEST(Parse, ComparisonConditionShape) {
  const Program p = parse("fn f(a: int, b: int): int { if (a < b) { return 1; } return 0; }");
  const auto& ifs = std::get<IfStmt>(p.functions[0].body.stmts[0]->node);
  const auto& cmp = std::get<BinaryExpr>(ifs.condition->node);
  EXPECT_EQ(cmp.op, BinaryOp::Lt);
}

TEST(Parse, StaticErrors) {
  EXPECT_THROW(parse("fn f(): int { return 1; } fn f(): int { return 2; }"), ParseError);
  EXPECT_THROW(parse("fn f(a: int, a: int): int { return a; }"), ParseError);
  EXPECT_THROW(parse("fn f(): int { return x; }"), ParseError);
  EXPECT_THROW(parse("fn f(): int { return 1.5; }"), ParseError);           // type mismatch
  EXPECT_THROW(parse("fn f(): int { let x: int = true; return x; }"), ParseError);
  EXPECT_THROW(parse("fn f(): int { if (1) { return 1; } return 0; }"), ParseError);
  EXPECT_THROW(parse("fn f(): int { return 1 + 1.5; }"), ParseError);       // no coercions
  EXPECT_THROW(parse("fn f(): int { return 1.0 % 2.0; }"), ParseError);     // % is int-only
  EXPECT_THROW(parse("fn g() {} fn f(): int { return g(); }"), ParseError);  // void as value
  EXPECT_THROW(parse("fn f(): int { return h(); }"), ParseError);           // unknown callee
  EXPECT_THROW(parse("fn f(x: bool): int { x++; return 0; }"), ParseError);
  EXPECT_THROW(parse("fn f(): int { let a: int = 1; let a: int = 2; return a; }"), ParseError);
}

TEST(Parse, SyntaxErrorCarriesLocation) {
  try {
    parse("fn f(): int {\n  return 1 +;\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location().line, 2);
    EXPECT_GT(e.location().column, 0);
    EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos);
  }
}

TEST(Parse, PrecedencePinning) {
  // && binds tighter than ||.
  {
    const Program p =
        parse("fn f(a: bool, b: bool, c: bool): bool { return a || b && c; }");
    const auto& ret = std::get<ReturnStmt>(p.functions[0].body.stmts[0]->node);
    const auto& orx = std::get<BinaryExpr>(ret.value->node);
    EXPECT_EQ(orx.op, BinaryOp::Or);
    EXPECT_EQ(std::get<BinaryExpr>(orx.rhs->node).op, BinaryOp::And);
  }
  // * binds tighter than +.
  {
    const Program p = parse("fn f(): int { return 1 + 2 * 3; }");
    const auto& ret = std::get<ReturnStmt>(p.functions[0].body.stmts[0]->node);
    const auto& add = std::get<BinaryExpr>(ret.value->node);
    EXPECT_EQ(add.op, BinaryOp::Add);
    EXPECT_EQ(std::get<BinaryExpr>(add.rhs->node).op, BinaryOp::Mul);
  }
  // Comparison binds tighter than equality.
  {
    const Program p =
        parse("fn f(a: int, b: int, c: int, d: int): bool { return a < b == c < d; }");
    const auto& ret = std::get<ReturnStmt>(p.functions[0].body.stmts[0]->node);
    const auto& eq = std::get<BinaryExpr>(ret.value->node);
    EXPECT_EQ(eq.op, BinaryOp::Eq);
    EXPECT_EQ(std::get<BinaryExpr>(eq.lhs->node).op, BinaryOp::Lt);
    EXPECT_EQ(std::get<BinaryExpr>(eq.rhs->node).op, BinaryOp::Lt);
  }
}

TEST(Parse, BareSemicolonIsNoOp) {
  const Program p = parse("fn f() { ; }");
  ASSERT_EQ(p.functions[0].body.stmts.size(), 1u);
  EXPECT_EQ(kind_of(*p.functions[0].body.stmts[0]), StatementKind::NoOp);
}

TEST(Enumerate, SingleReturn) {
  const Program p = parse("fn f(): int { return 1; }");
  const auto infos = enumerate_statements(p);
  ASSERT_EQ(infos.size(), 1u);
  EXPECT_EQ(infos[0].id, 0);
  EXPECT_EQ(infos[0].nesting_depth, 1);
  EXPECT_EQ(infos[0].kind, StatementKind::Return);
  EXPECT_EQ(infos[0].enclosing_function, "f");
}

TEST(Enumerate, WhileInsideIfGivesDepth3) {
  const Program p = parse(
      "fn f(n: int): int {\n"
      "  if (n > 0) {\n"
      "    while (n > 0) {\n"
      "      n--;\n"
      "    }\n"
      "  }\n"
      "  return n;\n"
      "}");
  const auto infos = enumerate_statements(p);
  // ids: 0 if, 1 while, 2 n--, 3 return
  EXPECT_EQ(infos[0].nesting_depth, 1);
  EXPECT_EQ(infos[1].nesting_depth, 2);
  EXPECT_EQ(infos[2].nesting_depth, 3);
  EXPECT_EQ(infos[3].nesting_depth, 1);
}

TEST(Enumerate, ElseIfNestsOneDeeper) {
  const Program p = parse(
      "fn f(n: int): int {\n"
      "  if (n > 0) {\n"
      "    return 1;\n"
      "  } else if (n < 0) {\n"
      "    return -1;\n"
      "  }\n"
      "  return 0;\n"
      "}");
  const auto infos = enumerate_statements(p);
  // ids: 0 outer if (d1), 1 return 1 (d2), 2 inner if (d2), 3 return -1 (d3), 4 return 0 (d1)
  ASSERT_EQ(infos.size(), 5u);
  EXPECT_EQ(infos[2].kind, StatementKind::If);
  EXPECT_EQ(infos[2].nesting_depth, 2);
  EXPECT_EQ(infos[3].nesting_depth, 3);
}

// Hand count for the bundled nesting1.mini: 2 ifs + 1 while + 4 simple
// statements = 7 entries, 6 branch arms.
TEST(Enumerate, Nesting1HandCount) {
  const Program p = load_corpus("nesting1.mini");
  const auto infos = enumerate_statements(p);
  ASSERT_EQ(infos.size(), 7u);
  int ifs = 0, whiles = 0, simple = 0;
  for (const auto& s : infos) {
    if (s.kind == StatementKind::If) ++ifs;
    else if (s.kind == StatementKind::While) ++whiles;
    else ++simple;
  }
  EXPECT_EQ(ifs, 2);
  EXPECT_EQ(whiles, 1);
  EXPECT_EQ(simple, 4);
  EXPECT_EQ(enumerate_branches(p).size(), 6u);
  // acc++ sits inside if inside while: depth 3.
  bool found_depth3 = false;
  for (const auto& s : infos)
    if (s.kind == StatementKind::Increment && s.nesting_depth == 3) found_depth3 = true;
  EXPECT_TRUE(found_depth3);
}

TEST(Enumerate, BranchCounts) {
  EXPECT_TRUE(enumerate_branches(parse("fn f(): int { return 1; }")).empty());
  const Program p = parse(
      "fn f(n: int): int { if (n > 0) { return 1; } while (n < 0) { n++; } return 0; }");
  const auto branches = enumerate_branches(p);
  ASSERT_EQ(branches.size(), 4u);
  EXPECT_EQ(branches[0].owning_statement, branches[1].owning_statement);
  EXPECT_TRUE(branches[0].arm);
  EXPECT_FALSE(branches[1].arm);
}

TEST(Enumerate, IdsAreDenseAndOrdered) {
  RandomProgramGen gen(11);
  for (int round = 0; round < 100; ++round) {
    const Program p = gen.generate();
    const auto infos = enumerate_statements(p);
    ASSERT_EQ(static_cast<int>(infos.size()), p.statement_count);
    for (std::size_t i = 0; i < infos.size(); ++i)
      EXPECT_EQ(infos[i].id, static_cast<StatementId>(i));
    EXPECT_EQ(enumerate_branches(p).size() % 2, 0u);
  }
  for (const auto& name : corpus_program_names()) {
    const auto infos = enumerate_statements(load_corpus(name));
    for (std::size_t i = 0; i < infos.size(); ++i)
      EXPECT_EQ(infos[i].id, static_cast<StatementId>(i));
  }
}

// Depth re-derived by an independent walk that carries an explicit stack of
// enclosing bodies.
TEST(Enumerate, DepthMatchesIndependentWalk) {
  const auto check = [](const Program& p) {
    std::map<StatementId, int> expected;
    std::function<void(const Block&, int)> walk = [&](const Block& block, int enclosing) {
      for (const auto& stmt : block.stmts) {
        expected[stmt->id] = enclosing + 1;
        if (const auto* f = std::get_if<IfStmt>(&stmt->node)) {
          walk(f->then_body, enclosing + 1);
          if (f->else_body) walk(*f->else_body, enclosing + 1);
        } else if (const auto* w = std::get_if<WhileStmt>(&stmt->node)) {
          walk(w->body, enclosing + 1);
        }
      }
    };
    for (const auto& fn : p.functions) walk(fn.body, 0);
    for (const auto& info : enumerate_statements(p))
      EXPECT_EQ(info.nesting_depth, expected.at(info.id));
  };
  for (const auto& name : corpus_program_names()) check(load_corpus(name));
  RandomProgramGen gen(23);
  for (int round = 0; round < 50; ++round) check(gen.generate());
}

TEST(PrettyPrint, RoundTripMinimal) {
  const Program p = parse("fn f(a: int): int { return a + 1; }");
  const Program reparsed = parse(pretty_print(p));
  EXPECT_TRUE(structurally_equal(p, reparsed));
}

TEST(PrettyPrint, Idempotent) {
  for (const auto& name : corpus_program_names()) {
    const Program p = load_corpus(name);
    const std::string once = pretty_print(p);
    EXPECT_EQ(pretty_print(parse(once)), once) << name;
  }
}

TEST(PrettyPrint, RoundTripCorpus) {
  for (const auto& name : corpus_program_names()) {
    const Program p = load_corpus(name);
    EXPECT_TRUE(structurally_equal(p, parse(pretty_print(p)))) << name;
  }
}

// Parser fuzz: generator-produced random ASTs survive print -> parse.
TEST(PrettyPrint, RoundTripRandomPrograms) {
  RandomProgramGen gen(42);
  for (int round = 0; round < 300; ++round) {
    const Program p = gen.generate();
    const std::string text = pretty_print(p);
    Program reparsed;
    try {
      reparsed = parse(text);
    } catch (const ParseError& e) {
      FAIL() << "round " << round << ": " << e.what() << "\n" << text;
    }
    EXPECT_TRUE(structurally_equal(p, reparsed)) << "round " << round << "\n" << text;
    EXPECT_EQ(pretty_print(reparsed), text);
  }
}

TEST(PrettyPrint, ParenthesizationEdgeCases) {
  // Right-associative grouping must keep explicit parens.
  EXPECT_EQ(pretty_print(parse("fn f(a: int): int { return a - (a - 1); }")),
            "fn f(a: int): int {\n  return a - (a - 1);\n}\n");
  // Nested negation must not collapse into a `--` token.
  const Program p = parse("fn f(a: int): int { return -(-a); }");
  const std::string text = pretty_print(p);
  EXPECT_TRUE(structurally_equal(p, parse(text)));
  // Float literals keep a distinguishing mark.
  EXPECT_EQ(pretty_print(parse("fn f(): float { return 100.0; }")),
            "fn f(): float {\n  return 100.0;\n}\n");
}

TEST(Clone, PreservesIdsAndStructure) {
  for (const auto& name : corpus_program_names()) {
    const Program p = load_corpus(name);
    const Program copy = clone_program(p);
    EXPECT_TRUE(structurally_equal(p, copy));
    EXPECT_EQ(pretty_print(p), pretty_print(copy));
  }
}

TEST(Renumber, MatchesParserNumbering) {
  const Program p = load_corpus("triangle.mini");
  Program clone = clone_program(p);
  renumber_statements(clone);
  EXPECT_TRUE(structurally_equal(p, clone));
}

}  // namespace
}  // namespace sbflbench
