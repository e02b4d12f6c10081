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

#include <cmath>
#include <random>

#include "sbflbench/sbfl.hpp"
#include "oracles.hpp"

namespace sbflbench {
namespace {

TestExecution make_exec(std::string name, Verdict verdict, std::vector<StatementId> hits) {
  TestExecution e;
  e.case_name = std::move(name);
  e.verdict = verdict;
  e.statements_hit = std::move(hits);
  return e;
}

CoverageSpectrum make_spectrum(std::vector<TestExecution> execs, StatementId universe_size) {
  CoverageSpectrum s;
  s.program_id = "synthetic";
  s.suite_name = "synthetic";
  s.executions = std::move(execs);
  for (StatementId i = 0; i < universe_size; ++i) s.statement_universe.push_back(i);
  return s;
}

// Uniformly random spectra: up to `max_stmts` statements, up to `max_tests`
// tests, each test failing with probability ~1/3 and hitting each statement
// with probability ~1/2.
CoverageSpectrum random_spectrum(std::mt19937_64& rng, int max_stmts, int max_tests) {
  const int n_stmts = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_stmts));
  const int n_tests = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_tests));
  std::vector<TestExecution> execs;
  for (int t = 0; t < n_tests; ++t) {
    std::vector<StatementId> hits;
    for (StatementId s = 0; s < n_stmts; ++s)
      if (rng() & 1) hits.push_back(s);
    execs.push_back(make_exec("t" + std::to_string(t),
                              rng() % 3 == 0 ? Verdict::FailAssertion : Verdict::Pass,
                              std::move(hits)));
  }
  return make_spectrum(std::move(execs), n_stmts);
}

TEST(Ochiai, KnownValues) {
  EXPECT_DOUBLE_EQ(ochiai(1, 0, 1), 1.0);
  EXPECT_DOUBLE_EQ(ochiai(0, 5, 3), 0.0);
  // 2 / sqrt(4 * 2) = 1/sqrt(2)
  EXPECT_NEAR(ochiai(2, 0, 4), 0.70710678118654752, 1e-15);
  EXPECT_DOUBLE_EQ(ochiai(0, 0, 0), 0.0);  // both degenerate cases
  EXPECT_DOUBLE_EQ(ochiai(0, 0, 5), 0.0);
}

TEST(Ochiai, ContractViolations) {
  EXPECT_THROW(ochiai(3, 0, 2), std::invalid_argument);
  EXPECT_THROW(ochiai(-1, 0, 2), std::invalid_argument);
}

TEST(Ochiai, Monotonicity) {
  // Non-decreasing in fail_s, non-increasing in pass_s.
  for (int total_fail = 1; total_fail <= 10; ++total_fail)
    for (int fail = 0; fail < total_fail; ++fail)
      for (int pass = 0; pass <= 10; ++pass) {
        EXPECT_LE(ochiai(fail, pass, total_fail), ochiai(fail + 1, pass, total_fail) + 1e-15);
        EXPECT_GE(ochiai(fail, pass, total_fail), ochiai(fail, pass + 1, total_fail) - 1e-15);
      }
}

TEST(BuildTable, WorkedExample) {
  // 1 failing test hits {s0}; 1 passing hits {s0, s1}:
  // susp(s0) = 1/sqrt(1*2), susp(s1) = 0.
  const auto spectrum = make_spectrum(
      {make_exec("fail", Verdict::FailAssertion, {0}), make_exec("pass", Verdict::Pass, {0, 1})},
      2);
  const SuspiciousnessTable table = build_table(spectrum);
  EXPECT_EQ(table.total_fail, 1);
  EXPECT_NEAR(table.entries.at(0).susp, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(table.entries.at(1).susp, 0.0);
  EXPECT_EQ(table.entries.at(0).fail_count, 1);
  EXPECT_EQ(table.entries.at(0).pass_count, 1);
  EXPECT_EQ(table.executed_statements, (std::vector<StatementId>{0, 1}));
}

TEST(BuildTable, AllPassingMeansZeroSuspicion) {
  const auto spectrum = make_spectrum(
      {make_exec("a", Verdict::Pass, {0, 1}), make_exec("b", Verdict::Pass, {1})}, 2);
  const SuspiciousnessTable table = build_table(spectrum);
  EXPECT_EQ(table.total_fail, 0);
  for (const auto& [id, entry] : table.entries) EXPECT_DOUBLE_EQ(entry.susp, 0.0);
}

TEST(BuildTable, AnyNonPassVerdictCountsAsFailure) {
  const auto spectrum =
      make_spectrum({make_exec("t", Verdict::FailTimeout, {0}),
                     make_exec("r", Verdict::FailRuntime, {0}),
                     make_exec("a", Verdict::FailAssertion, {0})},
                    1);
  EXPECT_EQ(build_table(spectrum).total_fail, 3);
}

TEST(BuildTable, MatchesBruteForceTallyOnRandomSpectra) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 300; ++round) {
    const CoverageSpectrum spectrum = random_spectrum(rng, 20, 30);
    const SuspiciousnessTable table = build_table(spectrum);
    const auto oracle = testing::oracle_tally(spectrum);
    ASSERT_EQ(table.entries.size(), oracle.size());
    for (const auto& [id, expected] : oracle) {
      const auto& entry = table.entries.at(id);
      EXPECT_EQ(entry.fail_count, expected.fail);
      EXPECT_EQ(entry.pass_count, expected.pass);
      EXPECT_NEAR(entry.susp, expected.susp, 1e-12);
    }
  }
}

TEST(BuildTable, PermutationInvariance) {
  std::mt19937_64 rng(5150);
  for (int round = 0; round < 50; ++round) {
    CoverageSpectrum spectrum = random_spectrum(rng, 12, 12);
    const SuspiciousnessTable before = build_table(spectrum);
    std::shuffle(spectrum.executions.begin(), spectrum.executions.end(), rng);
    const SuspiciousnessTable after = build_table(spectrum);
    ASSERT_EQ(before.entries.size(), after.entries.size());
    for (const auto& [id, entry] : before.entries) {
      EXPECT_DOUBLE_EQ(entry.susp, after.entries.at(id).susp);
    }
  }
}

SuspiciousnessTable table_from_susp(const std::vector<double>& susp) {
  SuspiciousnessTable table;
  for (std::size_t i = 0; i < susp.size(); ++i) {
    table.entries[static_cast<StatementId>(i)] = SuspiciousnessEntry{0, 0, susp[i]};
    table.executed_statements.push_back(static_cast<StatementId>(i));
  }
  return table;
}

// The worked tie example: two statements at susp 1.0 are both ranked 2, the
// next (0.8) is ranked 3.
TEST(Rank, WorstRankTieExample) {
  const RankedStatements ranked = rank_statements(table_from_susp({1.0, 1.0, 0.8}));
  EXPECT_EQ(ranked.ranks.at(0), 2);
  EXPECT_EQ(ranked.ranks.at(1), 2);
  EXPECT_EQ(ranked.ranks.at(2), 3);
  EXPECT_EQ(ranked.universe_size, 3);
}

TEST(Rank, StrictlyDescending) {
  const RankedStatements ranked = rank_statements(table_from_susp({0.9, 0.5, 0.1}));
  EXPECT_EQ(ranked.ranks.at(0), 1);
  EXPECT_EQ(ranked.ranks.at(1), 2);
  EXPECT_EQ(ranked.ranks.at(2), 3);
}

TEST(Rank, AllEqualGetWorstRank) {
  const RankedStatements ranked = rank_statements(table_from_susp({0.4, 0.4, 0.4, 0.4}));
  for (const auto& [id, rank] : ranked.ranks) EXPECT_EQ(rank, 4);
}

TEST(Rank, EmptyUniverseIsAnError) {
  EXPECT_THROW(rank_statements(SuspiciousnessTable{}), std::invalid_argument);
}

TEST(Rank, MatchesCountingOracleOnRandomVectors) {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 500; ++round) {
    const int n = 1 + static_cast<int>(rng() % 40);
    std::vector<double> susp;
    std::map<StatementId, double> susp_map;
    for (int i = 0; i < n; ++i) {
      // Coarse grid so ties actually occur.
      const double v = static_cast<double>(rng() % 8) / 8.0;
      susp.push_back(v);
      susp_map[static_cast<StatementId>(i)] = v;
    }
    const RankedStatements ranked = rank_statements(table_from_susp(susp));
    const auto expected = testing::oracle_worst_rank(susp_map);
    for (const auto& [id, rank] : ranked.ranks) EXPECT_EQ(rank, expected.at(id));
  }
}

TEST(Rank, PairwiseConsistency) {
  std::mt19937_64 rng(31337);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(rng() % 20);
    std::vector<double> susp;
    for (int i = 0; i < n; ++i) susp.push_back(static_cast<double>(rng() % 5) / 5.0);
    const RankedStatements ranked = rank_statements(table_from_susp(susp));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (susp[static_cast<std::size_t>(a)] > susp[static_cast<std::size_t>(b)]) {
          EXPECT_LT(ranked.ranks.at(a), ranked.ranks.at(b));
        }
        if (susp[static_cast<std::size_t>(a)] == susp[static_cast<std::size_t>(b)]) {
          EXPECT_EQ(ranked.ranks.at(a), ranked.ranks.at(b));
        }
      }
  }
}

TEST(RScore, EndpointsAndKnownValues) {
  EXPECT_DOUBLE_EQ(rscore(1, 10), 1.0);
  EXPECT_DOUBLE_EQ(rscore(10, 10), 0.0);
  EXPECT_NEAR(rscore(2, 10), 1.0 - 1.0 / 9.0, 1e-15);  // 0.888...
  EXPECT_DOUBLE_EQ(rscore(1, 1), 1.0);                 // degenerate universe
  for (int n = 2; n <= 100; ++n) {
    EXPECT_DOUBLE_EQ(rscore(1, n), 1.0);
    EXPECT_DOUBLE_EQ(rscore(n, n), 0.0);
  }
}

TEST(RScore, StrictlyDecreasingInRank) {
  for (int n = 2; n <= 30; ++n)
    for (int rank = 1; rank < n; ++rank) EXPECT_GT(rscore(rank, n), rscore(rank + 1, n));
}

TEST(RScore, ContractViolations) {
  EXPECT_THROW(rscore(0, 5), std::invalid_argument);
  EXPECT_THROW(rscore(6, 5), std::invalid_argument);
  EXPECT_THROW(rscore(1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace sbflbench
