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

#ifndef SBFLBENCH_SBFL_HPP
#define SBFLBENCH_SBFL_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sbflbench/interp.hpp"

namespace sbflbench {

struct SuspiciousnessEntry {
  int fail_count = 0;
  int pass_count = 0;
  double susp = 0.0;
};

struct SuspiciousnessTable {
  // One entry per executed statement (hit by at least one test).
  std::map<StatementId, SuspiciousnessEntry> entries;
  int total_fail = 0;
  std::vector<StatementId> executed_statements;  // ascending ids
};

struct RankedStatements {
  std::map<StatementId, int> ranks;  // 1-based
  int universe_size = 0;
};

/// Ochiai suspiciousness:
///
///   susp(s) = fail(s) / sqrt(totalFail * (fail(s) + pass(s)))
///
/// Both zero-denominator cases (no failing tests at all, or a statement
/// executed by no test) yield 0: without failing evidence there is no
/// suspicion.
inline double ochiai(int fail_s, int pass_s, int total_fail) {
  if (fail_s < 0 || pass_s < 0 || total_fail < 0)
    throw std::invalid_argument("ochiai: counts must be non-negative");
  if (fail_s > total_fail)
    throw std::invalid_argument("ochiai: fail(s) cannot exceed totalFail");
  if (total_fail == 0 || fail_s + pass_s == 0) return 0.0;
  return static_cast<double>(fail_s) /
         std::sqrt(static_cast<double>(total_fail) * (static_cast<double>(fail_s) + pass_s));
}

/// Tallies per-statement pass/fail execution counts from a spectrum and
/// scores each executed statement with Ochiai. Any non-pass verdict counts
/// as a failed test.
inline SuspiciousnessTable build_table(const CoverageSpectrum& spectrum) {
  SuspiciousnessTable table;
  for (const TestExecution& exec : spectrum.executions) {
    const bool failed = exec.verdict != Verdict::Pass;
    if (failed) ++table.total_fail;
    for (const StatementId id : exec.statements_hit) {
      auto& entry = table.entries[id];
      if (failed) ++entry.fail_count;
      else ++entry.pass_count;
    }
  }
  for (auto& [id, entry] : table.entries) {
    entry.susp = ochiai(entry.fail_count, entry.pass_count, table.total_fail);
    table.executed_statements.push_back(id);
  }
  return table;
}

/// Ranks executed statements by descending suspiciousness. Ties share the
/// worst (largest) position of their group: rank(s) = |{t : susp(t) >=
/// susp(s)}|, so two statements at susp 1.0 are both ranked 2 and the next
/// distinct value is ranked 3.
inline RankedStatements rank_statements(const SuspiciousnessTable& table) {
  if (table.executed_statements.empty())
    throw std::invalid_argument("rank_statements: no executed statements to rank");
  RankedStatements ranked;
  ranked.universe_size = static_cast<int>(table.executed_statements.size());
  std::vector<std::pair<double, StatementId>> order;
  order.reserve(table.executed_statements.size());
  for (const StatementId s : table.executed_statements)
    order.emplace_back(table.entries.at(s).susp, s);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.first > b.first || (a.first == b.first && a.second < b.second);
  });
  std::size_t group_start = 0;
  while (group_start < order.size()) {
    std::size_t group_end = group_start;  // one past the tie group
    while (group_end < order.size() && order[group_end].first == order[group_start].first)
      ++group_end;
    for (std::size_t i = group_start; i < group_end; ++i)
      ranked.ranks.emplace(order[i].second, static_cast<int>(group_end));
    group_start = group_end;
  }
  return ranked;
}

/// Normalized rank in [0, 1]: 1 is top-ranked, 0 bottom-ranked.
///
///   rScore = 1 - (rank - 1) / (totalStatements - 1)
///
/// A one-statement universe is degenerate (0/0) and scores 1.0: the only
/// statement is trivially top-ranked.
inline double rscore(int rank, int universe_size) {
  if (universe_size < 1) throw std::invalid_argument("rscore: universe must be non-empty");
  if (rank < 1 || rank > universe_size)
    throw std::invalid_argument("rscore: rank out of range");
  if (universe_size == 1) return 1.0;
  return 1.0 - static_cast<double>(rank - 1) / static_cast<double>(universe_size - 1);
}

}  // namespace sbflbench

#endif  // SBFLBENCH_SBFL_HPP
