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

#ifndef SBFLBENCH_PIPELINE_HPP
#define SBFLBENCH_PIPELINE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbflbench/interp.hpp"
#include "sbflbench/mutation.hpp"
#include "sbflbench/parallel.hpp"
#include "sbflbench/sbfl.hpp"
#include "sbflbench/stats.hpp"

namespace sbflbench {

struct MutantResult {
  int mutant_id = 0;
  MutationOperator op = MutationOperator::ConditionalsBoundary;
  StatementId fault_statement = 0;
  int fault_depth = 0;
  bool killed = false;             // at least one non-pass verdict
  bool fault_in_universe = false;  // fault executed by at least one test
  int universe_size = 0;           // executed statements under this suite
  std::optional<int> rank;         // present when killed and fault executed
  std::optional<double> rscore;    // present iff killed; survivors are excluded
};

/// Aggregated suitability of a suite for fault localization: the mean rScore
/// over killed mutants, with per-depth and per-operator box-plot summaries.
struct SbflScoreResult {
  std::string program_id;
  std::string suite_name;
  std::vector<MutantResult> mutant_results;
  std::optional<double> sbfl_score;  // empty when no mutant was killed
  std::string diagnostic;            // explains an empty sbfl_score
  int mutants_total = 0;
  int mutants_killed = 0;
  int mutants_excluded = 0;  // survivors, excluded from the average
  std::map<int, DistributionSummary> by_depth;
  std::map<MutationOperator, DistributionSummary> by_operator;
};

/// Runs the suite against one mutant, ranks the fault statement's Ochiai
/// suspiciousness among all executed statements, and normalizes the rank.
/// A fault the suite never executes cannot be localized at all and scores 0.
/// Survivors (no failing test) carry no rScore.
inline MutantResult evaluate_mutant(const Mutant& mutant, const TestSuite& suite,
                                    std::int64_t step_limit = kDefaultStepLimit) {
  MutantResult result;
  result.mutant_id = mutant.id;
  result.op = mutant.site.op;
  result.fault_statement = mutant.fault_statement;
  result.fault_depth = mutant.fault_depth;

  const CoverageSpectrum spectrum = run_suite(mutant.mutated_program, suite, step_limit);
  const SuspiciousnessTable table = build_table(spectrum);
  result.universe_size = static_cast<int>(table.executed_statements.size());
  result.fault_in_universe = table.entries.count(mutant.fault_statement) > 0;
  result.killed = table.total_fail > 0;
  if (!result.killed) return result;

  if (result.fault_in_universe) {
    const RankedStatements ranked = rank_statements(table);
    result.rank = ranked.ranks.at(mutant.fault_statement);
    result.rscore = rscore(*result.rank, ranked.universe_size);
  } else {
    // Worst case by convention: an unexecuted fault sits at the bottom of
    // the ranking regardless of universe size.
    result.rank = result.universe_size;
    result.rscore = 0.0;
  }
  return result;
}

namespace detail {

inline void finalize_score(SbflScoreResult& result) {
  result.mutants_total = static_cast<int>(result.mutant_results.size());
  std::vector<double> scores;
  std::map<int, std::vector<double>> depth_scores;
  std::map<MutationOperator, std::vector<double>> op_scores;
  for (const MutantResult& m : result.mutant_results) {
    if (!m.killed) continue;
    ++result.mutants_killed;
    scores.push_back(*m.rscore);
    depth_scores[m.fault_depth].push_back(*m.rscore);
    op_scores[m.op].push_back(*m.rscore);
  }
  result.mutants_excluded = result.mutants_total - result.mutants_killed;
  if (scores.empty()) {
    result.diagnostic = result.mutants_total == 0
                            ? "program has no mutation sites"
                            : "no mutant was killed by the suite; SBFL score is undefined";
    return;
  }
  double sum = 0.0;
  for (const double s : scores) sum += s;
  result.sbfl_score = sum / static_cast<double>(scores.size());
  for (const auto& [depth, values] : depth_scores) result.by_depth.emplace(depth, summarize(values));
  for (const auto& [op, values] : op_scores) result.by_operator.emplace(op, summarize(values));
}

}  // namespace detail

/// Evaluates a fixed mutant set. Mutant evaluations are independent;
/// with jobs > 1 they run on a worker pool and merge by index, so results
/// do not depend on the degree of parallelism.
inline SbflScoreResult sbfl_score_over(const std::vector<Mutant>& mutants,
                                       const std::string& program_id, const TestSuite& suite,
                                       std::int64_t step_limit = kDefaultStepLimit, int jobs = 1) {
  SbflScoreResult result;
  result.program_id = program_id;
  result.suite_name = suite.name;
  result.mutant_results.resize(mutants.size());
  parallel_for_index(mutants.size(), jobs, [&](std::size_t i) {
    result.mutant_results[i] = evaluate_mutant(mutants[i], suite, step_limit);
  });
  detail::finalize_score(result);
  return result;
}

inline SbflScoreResult sbfl_score(const Program& program, const TestSuite& suite,
                                  std::int64_t step_limit = kDefaultStepLimit, int jobs = 1) {
  return sbfl_score_over(generate_all_mutants(program), program.source_name, suite, step_limit,
                         jobs);
}

//===----------------------------------------------------------------------===//
// Two-suite comparison
//===----------------------------------------------------------------------===//

struct PairedRscores {
  // Mutants killed by both suites, in mutant-id order.
  std::vector<int> mutant_ids;
  std::vector<double> a_rscores;
  std::vector<double> b_rscores;
};

struct SuiteComparison {
  std::string program_id;
  std::string suite_a;
  std::string suite_b;
  double statement_coverage_a = 0.0;
  double statement_coverage_b = 0.0;
  double branch_coverage_a = 0.0;
  double branch_coverage_b = 0.0;
  SbflScoreResult score_a;
  SbflScoreResult score_b;
  PairedRscores paired;  // Wilcoxon input: both-killed mutants only
  int killed_by_both = 0;
  int killed_only_a = 0;
  int killed_only_b = 0;
  int survived_both = 0;
};

/// Runs both suites over the identical mutant set (same ids, operators,
/// fault statements) plus coverage of the original program, and pairs
/// per-mutant rScores for downstream statistics.
inline SuiteComparison compare_suites(const Program& program, const TestSuite& suite_a,
                                      const TestSuite& suite_b,
                                      std::int64_t step_limit = kDefaultStepLimit, int jobs = 1) {
  SuiteComparison cmp;
  cmp.program_id = program.source_name;
  cmp.suite_a = suite_a.name;
  cmp.suite_b = suite_b.name;

  const CoverageSpectrum spec_a = run_suite(program, suite_a, step_limit);
  const CoverageSpectrum spec_b = run_suite(program, suite_b, step_limit);
  cmp.statement_coverage_a = statement_coverage(spec_a);
  cmp.statement_coverage_b = statement_coverage(spec_b);
  cmp.branch_coverage_a = branch_coverage(spec_a);
  cmp.branch_coverage_b = branch_coverage(spec_b);

  const std::vector<Mutant> mutants = generate_all_mutants(program);
  cmp.score_a = sbfl_score_over(mutants, program.source_name, suite_a, step_limit, jobs);
  cmp.score_b = sbfl_score_over(mutants, program.source_name, suite_b, step_limit, jobs);

  for (std::size_t i = 0; i < mutants.size(); ++i) {
    const MutantResult& ra = cmp.score_a.mutant_results[i];
    const MutantResult& rb = cmp.score_b.mutant_results[i];
    if (ra.killed && rb.killed) {
      ++cmp.killed_by_both;
      cmp.paired.mutant_ids.push_back(ra.mutant_id);
      cmp.paired.a_rscores.push_back(*ra.rscore);
      cmp.paired.b_rscores.push_back(*rb.rscore);
    } else if (ra.killed) {
      ++cmp.killed_only_a;
    } else if (rb.killed) {
      ++cmp.killed_only_b;
    } else {
      ++cmp.survived_both;
    }
  }
  return cmp;
}

}  // namespace sbflbench

#endif  // SBFLBENCH_PIPELINE_HPP
