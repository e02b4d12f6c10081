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

#ifndef SBFLBENCH_SUITEGEN_HPP
#define SBFLBENCH_SUITEGEN_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sbflbench/interp.hpp"

namespace sbflbench {

struct GenConfig {
  std::uint64_t seed = 0;
  int budget = 200;          // candidate executions attempted
  bool per_function = false; // round-robin over functions instead of sampling
  std::int64_t int_lo = -100;
  std::int64_t int_hi = 100;
  double float_lo = -100.0;
  double float_hi = 100.0;
  std::int64_t step_limit = kDefaultStepLimit;
  std::string suite_name = "generated";
};

namespace detail {

// All random draws go through these helpers rather than the standard
// distributions, whose outputs are implementation-defined; mt19937_64
// itself is fully specified, so generated suites are reproducible anywhere.
class ArgSampler {
 public:
  explicit ArgSampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(next_u64() % bound); }

  bool chance_percent(int percent) { return next_u64() % 100 < static_cast<std::uint64_t>(percent); }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  double uniform_real(double lo, double hi) {
    const double unit = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;  // [0, 1)
    return lo + (hi - lo) * unit;
  }

  // Comparison-heavy code turns on boundary values, so {lo, -1, 0, 1, hi}
  // get an elevated 25% share of the draws.
  Value sample(ValueType type, const GenConfig& cfg) {
    switch (type) {
      case ValueType::Int: {
        if (chance_percent(25)) {
          std::vector<std::int64_t> boundaries;
          for (const std::int64_t candidate : {cfg.int_lo, std::int64_t{-1}, std::int64_t{0},
                                               std::int64_t{1}, cfg.int_hi})
            if (candidate >= cfg.int_lo && candidate <= cfg.int_hi) boundaries.push_back(candidate);
          return boundaries[index(boundaries.size())];
        }
        return uniform_int(cfg.int_lo, cfg.int_hi);
      }
      case ValueType::Float: {
        if (chance_percent(25)) {
          std::vector<double> boundaries;
          for (const double candidate : {cfg.float_lo, -1.0, 0.0, 1.0, cfg.float_hi})
            if (candidate >= cfg.float_lo && candidate <= cfg.float_hi)
              boundaries.push_back(candidate);
          return boundaries[index(boundaries.size())];
        }
        return uniform_real(cfg.float_lo, cfg.float_hi);
      }
      case ValueType::Bool:
        return (next_u64() & 1) != 0;
    }
    return std::int64_t{0};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detail

/// Coverage-guided random test generation against the (fixed) program. Each
/// candidate calls a target function with sampled arguments; if it completes
/// without error within the step budget, the observed return value becomes
/// the expected value (a regression oracle), and the case is kept iff it
/// raises cumulative statement or branch coverage. Fully deterministic for a
/// given (program, config).
inline TestSuite generate_suite(const Program& program, const GenConfig& cfg) {
  if (program.functions.empty()) throw ConfigError("generate_suite: program has no functions");
  if (cfg.budget < 1) throw ConfigError("generate_suite: budget must be >= 1");
  if (cfg.int_lo > cfg.int_hi || cfg.float_lo > cfg.float_hi)
    throw ConfigError("generate_suite: invalid value range");

  detail::ArgSampler sampler(cfg.seed);
  TestSuite suite;
  suite.name = cfg.suite_name;
  suite.origin = SuiteOrigin::Generated;

  std::vector<bool> stmts_covered(static_cast<std::size_t>(program.statement_count), false);
  std::vector<bool> branches_covered(enumerate_branches(program).size(), false);

  for (int attempt = 0; attempt < cfg.budget; ++attempt) {
    const std::size_t fn_index = cfg.per_function
                                     ? static_cast<std::size_t>(attempt) % program.functions.size()
                                     : sampler.index(program.functions.size());
    const FunctionDecl& fn = program.functions[fn_index];

    TestCase candidate;
    candidate.name = fn.name + "_" + std::to_string(attempt);
    candidate.target_function = fn.name;
    for (const Param& p : fn.params) candidate.args.push_back(sampler.sample(p.type, cfg));

    detail::Interpreter interp(program, cfg.step_limit);
    Value observed = std::int64_t{0};
    try {
      observed = interp.call(fn.name, candidate.args);
    } catch (const detail::RuntimeFault&) {
      continue;  // no oracle for erroring runs
    } catch (const detail::StepLimitExceeded&) {
      continue;
    }

    const std::vector<StatementId> stmts_hit = interp.statements_hit();
    const std::vector<BranchId> branches_hit = interp.branches_hit();
    bool adds_coverage = false;
    for (const StatementId id : stmts_hit)
      if (!stmts_covered[static_cast<std::size_t>(id)]) adds_coverage = true;
    for (const BranchId id : branches_hit)
      if (!branches_covered[static_cast<std::size_t>(id)]) adds_coverage = true;
    if (!adds_coverage) continue;

    for (const StatementId id : stmts_hit) stmts_covered[static_cast<std::size_t>(id)] = true;
    for (const BranchId id : branches_hit) branches_covered[static_cast<std::size_t>(id)] = true;

    if (fn.return_type) candidate.expected_return = observed;
    suite.cases.push_back(std::move(candidate));
  }

  if (suite.cases.empty()) {
    std::size_t stm_total = stmts_covered.size();
    throw ConfigError("generate_suite: no coverage-increasing passing case found in " +
                      std::to_string(cfg.budget) + " attempts (0/" + std::to_string(stm_total) +
                      " statements covered); widen the ranges or raise the budget");
  }
  return suite;
}

/// Greedy backward minimization: walking cases in reverse insertion order,
/// drops any case whose removal leaves the union statement and branch
/// coverage unchanged. The result covers exactly what the input covered.
inline TestSuite minimize_suite(const Program& program, const TestSuite& suite,
                                std::int64_t step_limit = kDefaultStepLimit) {
  validate_suite(program, suite);
  const std::size_t n = suite.cases.size();
  std::vector<TestExecution> runs;
  runs.reserve(n);
  for (const TestCase& t : suite.cases) runs.push_back(run_test(program, t, step_limit));

  std::vector<bool> kept(n, true);
  const auto union_coverage = [&](int skip) {
    std::pair<std::vector<bool>, std::vector<bool>> cov{
        std::vector<bool>(static_cast<std::size_t>(program.statement_count), false),
        std::vector<bool>(enumerate_branches(program).size(), false)};
    for (std::size_t i = 0; i < n; ++i) {
      if (!kept[i] || static_cast<int>(i) == skip) continue;
      for (const StatementId id : runs[i].statements_hit)
        cov.first[static_cast<std::size_t>(id)] = true;
      for (const BranchId id : runs[i].branches_hit)
        cov.second[static_cast<std::size_t>(id)] = true;
    }
    return cov;
  };

  const auto full = union_coverage(-1);
  for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
    if (union_coverage(i) == full) kept[static_cast<std::size_t>(i)] = false;
  }

  TestSuite minimized;
  minimized.name = suite.name;
  minimized.origin = suite.origin;
  for (std::size_t i = 0; i < n; ++i)
    if (kept[i]) minimized.cases.push_back(suite.cases[i]);
  return minimized;
}

}  // namespace sbflbench

#endif  // SBFLBENCH_SUITEGEN_HPP
