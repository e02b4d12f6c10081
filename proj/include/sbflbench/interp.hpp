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

#ifndef SBFLBENCH_INTERP_HPP
#define SBFLBENCH_INTERP_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sbflbench/analysis.hpp"
#include "sbflbench/ast.hpp"
#include "sbflbench/diagnostics.hpp"
#include "sbflbench/printer.hpp"

namespace sbflbench {

//===----------------------------------------------------------------------===//
// Runtime values
//===----------------------------------------------------------------------===//

using Value = std::variant<std::int64_t, double, bool>;

inline ValueType type_of(const Value& v) {
  if (std::holds_alternative<std::int64_t>(v)) return ValueType::Int;
  if (std::holds_alternative<double>(v)) return ValueType::Float;
  return ValueType::Bool;
}

inline std::string to_string(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* f = std::get_if<double>(&v)) return format_float_literal(*f);
  return std::get<bool>(v) ? "true" : "false";
}

//===----------------------------------------------------------------------===//
// Test cases and suites
//===----------------------------------------------------------------------===//

struct TestCase {
  std::string name;
  std::string target_function;
  std::vector<Value> args;
  // Engaged: assert the return value (exact for int/bool, 1e-9 absolute for
  // float). Disengaged: only assert the call completes without error.
  std::optional<Value> expected_return;
};

enum class SuiteOrigin { Manual, Generated, Other };

inline const char* to_string(SuiteOrigin o) {
  switch (o) {
    case SuiteOrigin::Manual: return "manual";
    case SuiteOrigin::Generated: return "generated";
    case SuiteOrigin::Other: return "other";
  }
  return "?";
}

struct TestSuite {
  std::string name;
  SuiteOrigin origin = SuiteOrigin::Other;
  std::vector<TestCase> cases;
};

enum class Verdict { Pass, FailAssertion, FailRuntime, FailTimeout };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::FailAssertion: return "fail_assertion";
    case Verdict::FailRuntime: return "fail_runtime";
    case Verdict::FailTimeout: return "fail_timeout";
  }
  return "?";
}

struct TestExecution {
  std::string case_name;
  Verdict verdict = Verdict::Pass;
  std::vector<StatementId> statements_hit;  // sorted, unique
  std::vector<BranchId> branches_hit;       // sorted, unique
  std::int64_t steps_used = 0;
  std::string failure_detail;
};

struct CoverageSpectrum {
  std::string program_id;
  std::string suite_name;
  std::vector<TestExecution> executions;
  std::vector<StatementId> statement_universe;
  std::vector<BranchId> branch_universe;
};

inline constexpr std::int64_t kDefaultStepLimit = 1'000'000;

// Guards the host stack against runaway MiniLang recursion; exceeding it is
// a runtime failure like any other.
inline constexpr int kMaxCallDepth = 2'000;

inline constexpr double kFloatAssertTolerance = 1e-9;

//===----------------------------------------------------------------------===//
// Evaluator
//===----------------------------------------------------------------------===//

namespace detail {

struct RuntimeFault {
  std::string message;
};
struct StepLimitExceeded {};

/// Tree-walking evaluator. One step is charged each time a statement begins
/// to execute; a while header is charged again on every iteration, so any
/// non-terminating execution exhausts the budget.
class Interpreter {
 public:
  Interpreter(const Program& program, std::int64_t step_limit)
      : program_(program),
        step_limit_(step_limit),
        stmt_hit_(static_cast<std::size_t>(program.statement_count), false) {
    for (const auto& fn : program.functions) functions_.emplace(fn.name, &fn);
    branch_base_ = branch_base_index(program);
    branch_hit_.assign(branch_base_.size() * 2, false);
  }

  Value call(const std::string& function, const std::vector<Value>& args) {
    const FunctionDecl* fn = functions_.at(function);
    return call_function(*fn, args);
  }

  std::int64_t steps_used() const { return steps_; }

  std::vector<StatementId> statements_hit() const {
    std::vector<StatementId> out;
    for (std::size_t i = 0; i < stmt_hit_.size(); ++i)
      if (stmt_hit_[i]) out.push_back(static_cast<StatementId>(i));
    return out;
  }

  std::vector<BranchId> branches_hit() const {
    std::vector<BranchId> out;
    for (std::size_t i = 0; i < branch_hit_.size(); ++i)
      if (branch_hit_[i]) out.push_back(static_cast<BranchId>(i));
    return out;
  }

 private:
  enum class Flow { Normal, Returned };

  struct Frame {
    std::vector<std::unordered_map<std::string, Value>> scopes;
    Value return_value = static_cast<std::int64_t>(0);
  };

  Value call_function(const FunctionDecl& fn, const std::vector<Value>& args) {
    if (++call_depth_ > kMaxCallDepth) {
      --call_depth_;
      throw RuntimeFault{"call depth limit (" + std::to_string(kMaxCallDepth) + ") exceeded"};
    }
    Frame frame;
    frame.scopes.emplace_back();
    for (std::size_t i = 0; i < fn.params.size(); ++i)
      frame.scopes.back().emplace(fn.params[i].name, args[i]);
    exec_block(fn.body, frame, /*new_scope=*/false);
    --call_depth_;
    return frame.return_value;
  }

  void charge_step(const Stmt& stmt) {
    if (steps_ >= step_limit_) throw StepLimitExceeded{};
    ++steps_;
    stmt_hit_[static_cast<std::size_t>(stmt.id)] = true;
  }

  void record_branch(const Stmt& stmt, bool outcome) {
    const BranchId base = branch_base_.at(stmt.id);
    branch_hit_[static_cast<std::size_t>(outcome ? base : base + 1)] = true;
  }

  Flow exec_block(const Block& block, Frame& frame, bool new_scope = true) {
    if (new_scope) frame.scopes.emplace_back();
    Flow flow = Flow::Normal;
    for (const auto& stmt : block.stmts) {
      flow = exec_stmt(*stmt, frame);
      if (flow == Flow::Returned) break;
    }
    if (new_scope) frame.scopes.pop_back();
    return flow;
  }

  Flow exec_stmt(const Stmt& stmt, Frame& frame) {
    charge_step(stmt);
    if (const auto* d = std::get_if<DeclareStmt>(&stmt.node)) {
      frame.scopes.back().insert_or_assign(d->name, eval(*d->init, frame));
      return Flow::Normal;
    }
    if (const auto* a = std::get_if<AssignStmt>(&stmt.node)) {
      *slot(a->name, frame) = eval(*a->value, frame);
      return Flow::Normal;
    }
    if (const auto* i = std::get_if<IncDecStmt>(&stmt.node)) {
      Value* v = slot(i->name, frame);
      const std::int64_t delta = i->increment ? 1 : -1;
      if (auto* iv = std::get_if<std::int64_t>(v))
        *iv = wrap_add(*iv, delta);
      else
        *std::get_if<double>(v) += static_cast<double>(delta);
      return Flow::Normal;
    }
    if (const auto* f = std::get_if<IfStmt>(&stmt.node)) {
      const bool taken = std::get<bool>(eval(*f->condition, frame));
      record_branch(stmt, taken);
      if (taken) return exec_block(f->then_body, frame);
      if (f->else_body) return exec_block(*f->else_body, frame);
      return Flow::Normal;
    }
    if (const auto* w = std::get_if<WhileStmt>(&stmt.node)) {
      while (true) {
        const bool taken = std::get<bool>(eval(*w->condition, frame));
        record_branch(stmt, taken);
        if (!taken) return Flow::Normal;
        if (exec_block(w->body, frame) == Flow::Returned) return Flow::Returned;
        charge_step(stmt);  // re-evaluating the loop header costs a step
      }
    }
    if (const auto* c = std::get_if<CallStmt>(&stmt.node)) {
      eval(*c->call, frame);  // value (if any) discarded
      return Flow::Normal;
    }
    if (const auto* r = std::get_if<ReturnStmt>(&stmt.node)) {
      if (r->value) frame.return_value = eval(*r->value, frame);
      return Flow::Returned;
    }
    return Flow::Normal;  // NoOpStmt
  }

  Value eval(const Expr& expr, Frame& frame) {
    if (const auto* i = std::get_if<IntLit>(&expr.node)) return i->value;
    if (const auto* f = std::get_if<FloatLit>(&expr.node)) return f->value;
    if (const auto* b = std::get_if<BoolLit>(&expr.node)) return b->value;
    if (const auto* v = std::get_if<VarRef>(&expr.node)) return *slot(v->name, frame);
    if (const auto* u = std::get_if<UnaryExpr>(&expr.node)) {
      Value operand = eval(*u->operand, frame);
      if (u->op == UnaryOp::Not) return !std::get<bool>(operand);
      if (const auto* iv = std::get_if<std::int64_t>(&operand)) return wrap_neg(*iv);
      return -std::get<double>(operand);
    }
    if (const auto* bin = std::get_if<BinaryExpr>(&expr.node)) {
      // Short-circuit forms evaluate the right operand only when needed.
      if (bin->op == BinaryOp::And) {
        if (!std::get<bool>(eval(*bin->lhs, frame))) return false;
        return std::get<bool>(eval(*bin->rhs, frame));
      }
      if (bin->op == BinaryOp::Or) {
        if (std::get<bool>(eval(*bin->lhs, frame))) return true;
        return std::get<bool>(eval(*bin->rhs, frame));
      }
      Value lhs = eval(*bin->lhs, frame);
      Value rhs = eval(*bin->rhs, frame);
      return apply_binary(bin->op, lhs, rhs);
    }
    const auto& call = std::get<CallExpr>(expr.node);
    std::vector<Value> args;
    args.reserve(call.args.size());
    for (const auto& a : call.args) args.push_back(eval(*a, frame));
    return call_function(*functions_.at(call.callee), args);
  }

  // Two's-complement wrap-around keeps integer arithmetic total and
  // deterministic (signed overflow would otherwise be undefined).
  static std::int64_t wrap_add(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
  }
  static std::int64_t wrap_sub(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
  }
  static std::int64_t wrap_mul(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
  }
  static std::int64_t wrap_neg(std::int64_t a) {
    return static_cast<std::int64_t>(-static_cast<std::uint64_t>(a));
  }

  Value apply_binary(BinaryOp op, const Value& lhs, const Value& rhs) {
    if (const auto* la = std::get_if<std::int64_t>(&lhs)) {
      const std::int64_t a = *la;
      const std::int64_t b = std::get<std::int64_t>(rhs);
      switch (op) {
        case BinaryOp::Add: return wrap_add(a, b);
        case BinaryOp::Sub: return wrap_sub(a, b);
        case BinaryOp::Mul: return wrap_mul(a, b);
        case BinaryOp::Div:
          if (b == 0) throw RuntimeFault{"division by zero"};
          if (a == INT64_MIN && b == -1) return INT64_MIN;  // wraps
          return a / b;
        case BinaryOp::Mod:
          if (b == 0) throw RuntimeFault{"modulo by zero"};
          if (a == INT64_MIN && b == -1) return static_cast<std::int64_t>(0);
          return a % b;
        case BinaryOp::Lt: return a < b;
        case BinaryOp::Le: return a <= b;
        case BinaryOp::Gt: return a > b;
        case BinaryOp::Ge: return a >= b;
        case BinaryOp::Eq: return a == b;
        case BinaryOp::Ne: return a != b;
        default: break;
      }
    } else if (const auto* lf = std::get_if<double>(&lhs)) {
      const double a = *lf;
      const double b = std::get<double>(rhs);
      switch (op) {
        case BinaryOp::Add: return a + b;
        case BinaryOp::Sub: return a - b;
        case BinaryOp::Mul: return a * b;
        case BinaryOp::Div:
          if (b == 0.0) throw RuntimeFault{"division by zero"};
          return a / b;
        case BinaryOp::Lt: return a < b;
        case BinaryOp::Le: return a <= b;
        case BinaryOp::Gt: return a > b;
        case BinaryOp::Ge: return a >= b;
        case BinaryOp::Eq: return a == b;
        case BinaryOp::Ne: return a != b;
        default: break;
      }
    } else {
      const bool a = std::get<bool>(lhs);
      const bool b = std::get<bool>(rhs);
      if (op == BinaryOp::Eq) return a == b;
      if (op == BinaryOp::Ne) return a != b;
    }
    throw RuntimeFault{"internal: invalid operator/operand combination"};
  }

  Value* slot(const std::string& name, Frame& frame) {
    for (auto it = frame.scopes.rbegin(); it != frame.scopes.rend(); ++it) {
      const auto found = it->find(name);
      if (found != it->end()) return &found->second;
    }
    throw RuntimeFault{"internal: unbound variable '" + name + "'"};
  }

  const Program& program_;
  std::int64_t step_limit_;
  std::int64_t steps_ = 0;
  int call_depth_ = 0;
  std::unordered_map<std::string, const FunctionDecl*> functions_;
  std::unordered_map<StatementId, BranchId> branch_base_;
  std::vector<bool> stmt_hit_;
  std::vector<bool> branch_hit_;
};

}  // namespace detail

//===----------------------------------------------------------------------===//
// Test execution
//===----------------------------------------------------------------------===//

/// Rejects cases whose target/arity/types do not match the program. A
/// mismatch is a harness configuration error, never a test failure.
inline void validate_case(const Program& program, const TestCase& t) {
  const FunctionDecl* fn = program.find_function(t.target_function);
  if (!fn)
    throw ConfigError("test '" + t.name + "': target function '" + t.target_function +
                      "' does not exist");
  if (t.args.size() != fn->params.size())
    throw ConfigError("test '" + t.name + "': '" + t.target_function + "' takes " +
                      std::to_string(fn->params.size()) + " argument(s), got " +
                      std::to_string(t.args.size()));
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (type_of(t.args[i]) != fn->params[i].type)
      throw ConfigError("test '" + t.name + "': argument " + std::to_string(i + 1) +
                        " expects " + to_string(fn->params[i].type) + ", got " +
                        to_string(type_of(t.args[i])));
  }
  if (t.expected_return) {
    if (!fn->return_type)
      throw ConfigError("test '" + t.name + "': '" + t.target_function +
                        "' is void but the test expects a return value");
    if (type_of(*t.expected_return) != *fn->return_type)
      throw ConfigError("test '" + t.name + "': expected return type " +
                        to_string(type_of(*t.expected_return)) + " does not match " +
                        to_string(*fn->return_type));
  }
}

inline void validate_suite(const Program& program, const TestSuite& suite) {
  if (suite.cases.empty()) throw ConfigError("suite '" + suite.name + "' has no test cases");
  std::unordered_map<std::string, int> seen;
  for (const auto& t : suite.cases) {
    if (++seen[t.name] > 1)
      throw ConfigError("suite '" + suite.name + "': duplicate case name '" + t.name + "'");
    validate_case(program, t);
  }
}

inline bool return_value_matches(const Value& got, const Value& want) {
  if (const auto* wf = std::get_if<double>(&want))
    return std::abs(std::get<double>(got) - *wf) <= kFloatAssertTolerance;
  return got == want;
}

/// Deterministic single-test execution. Statement and branch hits observed
/// before a failure are retained.
inline TestExecution run_test(const Program& program, const TestCase& t,
                              std::int64_t step_limit = kDefaultStepLimit) {
  validate_case(program, t);
  TestExecution exec;
  exec.case_name = t.name;
  detail::Interpreter interp(program, step_limit);
  try {
    const Value result = interp.call(t.target_function, t.args);
    if (t.expected_return && !return_value_matches(result, *t.expected_return)) {
      exec.verdict = Verdict::FailAssertion;
      exec.failure_detail =
          "expected " + to_string(*t.expected_return) + ", got " + to_string(result);
    }
  } catch (const detail::RuntimeFault& fault) {
    exec.verdict = Verdict::FailRuntime;
    exec.failure_detail = fault.message;
  } catch (const detail::StepLimitExceeded&) {
    exec.verdict = Verdict::FailTimeout;
    exec.failure_detail = "step limit (" + std::to_string(step_limit) + ") exceeded";
  }
  exec.statements_hit = interp.statements_hit();
  exec.branches_hit = interp.branches_hit();
  exec.steps_used = interp.steps_used();
  return exec;
}

inline CoverageSpectrum run_suite(const Program& program, const TestSuite& suite,
                                  std::int64_t step_limit = kDefaultStepLimit) {
  validate_suite(program, suite);
  CoverageSpectrum spectrum;
  spectrum.program_id = program.source_name;
  spectrum.suite_name = suite.name;
  for (const StatementInfo& s : enumerate_statements(program))
    spectrum.statement_universe.push_back(s.id);
  for (const BranchInfo& b : enumerate_branches(program)) spectrum.branch_universe.push_back(b.id);
  spectrum.executions.reserve(suite.cases.size());
  for (const TestCase& t : suite.cases)
    spectrum.executions.push_back(run_test(program, t, step_limit));
  return spectrum;
}

//===----------------------------------------------------------------------===//
// Coverage
//===----------------------------------------------------------------------===//

inline double statement_coverage(const CoverageSpectrum& spectrum) {
  if (spectrum.statement_universe.empty())
    throw std::invalid_argument("statement_coverage: empty statement universe");
  std::vector<bool> hit(spectrum.statement_universe.size(), false);
  std::size_t count = 0;
  for (const auto& exec : spectrum.executions)
    for (const StatementId id : exec.statements_hit)
      if (!hit[static_cast<std::size_t>(id)]) {
        hit[static_cast<std::size_t>(id)] = true;
        ++count;
      }
  return static_cast<double>(count) / static_cast<double>(spectrum.statement_universe.size());
}

/// Fraction of branch arms exercised; 1.0 for a branchless program (the
/// criterion is vacuously met).
inline double branch_coverage(const CoverageSpectrum& spectrum) {
  if (spectrum.branch_universe.empty()) return 1.0;
  std::vector<bool> hit(spectrum.branch_universe.size(), false);
  std::size_t count = 0;
  for (const auto& exec : spectrum.executions)
    for (const BranchId id : exec.branches_hit)
      if (!hit[static_cast<std::size_t>(id)]) {
        hit[static_cast<std::size_t>(id)] = true;
        ++count;
      }
  return static_cast<double>(count) / static_cast<double>(spectrum.branch_universe.size());
}

}  // namespace sbflbench

#endif  // SBFLBENCH_INTERP_HPP
