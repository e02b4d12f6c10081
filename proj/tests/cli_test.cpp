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
//
// End-to-end checks that drive the installed binary.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sbflbench/minilang.hpp"
#include "sbflbench/pipeline.hpp"
#include "sbflbench/suite_io.hpp"
#include "test_util.hpp"

namespace sbflbench {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& stderr_sink = "/dev/null") {
  const std::string command =
      std::string(SBFLBENCH_CLI_PATH) + " " + args + " 2>" + stderr_sink;
  FILE* pipe = popen(command.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string output;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, n);
  const int status = pclose(pipe);
  return CliResult{WEXITSTATUS(status), output};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "sbflbench_cli_test";
  fs::create_directories(dir);
  return dir;
}

TEST(Cli, ParseEmitsStatementTable) {
  const CliResult r = run_cli("parse " + testing::corpus_path("max.mini"));
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["statements"].size(), 3u);
  EXPECT_EQ(j["branches"].size(), 2u);
  EXPECT_EQ(j["functions"][0]["name"], "max");
}

TEST(Cli, CoverageTextOutput) {
  const CliResult r = run_cli("coverage " + testing::corpus_path("triangle.mini") + " " +
                              testing::corpus_path("triangle_manual.suite"));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "statement 1.0\nbranch 1.0\n");
}

TEST(Cli, CoverageJsonOutput) {
  const CliResult r = run_cli("coverage --format json " + testing::corpus_path("max.mini") + " " +
                              testing::corpus_path("max_manual.suite"));
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["statement_coverage"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["branch_coverage"].get<double>(), 1.0);
}

TEST(Cli, MutantsManifestRowCount) {
  const CliResult r = run_cli("mutants " + testing::corpus_path("max.mini"));
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["operator"], "ConditionalsBoundary");
  EXPECT_EQ(j[0]["description"], "a < b -> a <= b");
  for (const auto& row : j) {
    EXPECT_TRUE(row.contains("statement"));
    EXPECT_TRUE(row.contains("line"));
    EXPECT_TRUE(row.contains("depth"));
  }
}

// The ranked CSV's fault row must agree with evaluate_mutant.
TEST(Cli, SbflRankedCsvMatchesEvaluateMutant) {
  const Program p = testing::load_corpus("max.mini");
  const TestSuite suite = load_suite(testing::corpus_path("max_manual.suite"));
  const auto mutants = generate_all_mutants(p);
  const MutantResult expected = evaluate_mutant(mutants[1], suite);
  ASSERT_TRUE(expected.killed);

  const CliResult r = run_cli("sbfl " + testing::corpus_path("max.mini") + " " +
                              testing::corpus_path("max_manual.suite") + " --mutant 1");
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream csv(r.out);
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "statement,line,fail,pass,susp,rank,rscore");
  bool found_fault = false;
  while (std::getline(csv, line)) {
    std::vector<std::string> f;
    std::string field;
    std::istringstream row(line);
    while (std::getline(row, field, ',')) f.push_back(field);
    ASSERT_EQ(f.size(), 7u);
    if (std::stoi(f[0]) == expected.fault_statement) {
      found_fault = true;
      EXPECT_EQ(std::stoi(f[5]), *expected.rank);
      EXPECT_NEAR(std::stod(f[6]), *expected.rscore, 1e-5);
    }
  }
  EXPECT_TRUE(found_fault);
}

TEST(Cli, ScoreMatchesLibrary) {
  const Program p = testing::load_corpus("triangle.mini");
  const TestSuite suite = load_suite(testing::corpus_path("triangle_manual.suite"));
  const SbflScoreResult expected = sbfl_score(p, suite);
  const CliResult r = run_cli("score " + testing::corpus_path("triangle.mini") + " " +
                              testing::corpus_path("triangle_manual.suite"));
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(expected.sbfl_score.has_value());
  EXPECT_NEAR(j["sbfl_score"].get<double>(), *expected.sbfl_score, 1e-12);
  EXPECT_EQ(j["mutants_total"].get<int>(), expected.mutants_total);
  EXPECT_EQ(j["mutants"].size(), static_cast<std::size_t>(expected.mutants_total));
}

TEST(Cli, GenIsByteDeterministic) {
  const fs::path dir = scratch_dir();
  const std::string args = "gen " + testing::corpus_path("triangle.mini") +
                           " --seed 42 --budget 150 --minimize -o ";
  ASSERT_EQ(run_cli(args + (dir / "g1.suite").string()).exit_code, 0);
  ASSERT_EQ(run_cli(args + (dir / "g2.suite").string()).exit_code, 0);
  const std::string first = slurp(dir / "g1.suite");
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, slurp(dir / "g2.suite"));
  const TestSuite suite = load_suite((dir / "g1.suite").string());
  EXPECT_EQ(suite.origin, SuiteOrigin::Generated);
}

TEST(Cli, StatsMatchesLibrary) {
  const fs::path dir = scratch_dir();
  const fs::path csv = dir / "paired.csv";
  {
    std::ofstream out(csv);
    out << "a,b\n51,50\n52,50\n53,50\n54,50\n55,50\n";
  }
  const CliResult r = run_cli("stats " + csv.string());
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"].get<int>(), 5);
  EXPECT_DOUBLE_EQ(j["two_sided"]["p_value"].get<double>(), 0.0625);
  EXPECT_EQ(j["two_sided"]["method"], "exact");
  EXPECT_DOUBLE_EQ(j["a_greater"]["p_value"].get<double>(), 0.03125);
}

TEST(Cli, CompareReportsBothSuites) {
  const CliResult r =
      run_cli("compare " + testing::corpus_path("max.mini") + " " +
              testing::corpus_path("max_manual.suite") + " " +
              testing::corpus_path("max_manual.suite"));
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kills"]["only_a"].get<int>(), 0);
  EXPECT_EQ(j["kills"]["only_b"].get<int>(), 0);
  EXPECT_EQ(j["statement_coverage"]["a"], j["statement_coverage"]["b"]);
}

TEST(Cli, RunWritesReportsAndSucceeds) {
  const fs::path dir = scratch_dir() / "run_out";
  fs::remove_all(dir);
  const CliResult r = run_cli("run " + testing::corpus_path("manifest.json") + " --out-dir " +
                              dir.string() + " --jobs 4");
  ASSERT_EQ(r.exit_code, 0);
  for (const char* name : {"report.json", "report.csv", "mutants.csv", "boxplot_depth.csv",
                           "boxplot_operator.csv", "excluded.csv"})
    EXPECT_TRUE(fs::exists(dir / name)) << name;
  const auto j = nlohmann::json::parse(slurp(dir / "report.json"));
  EXPECT_EQ(j["programs"].size(), 8u);
  EXPECT_EQ(j["excluded"].size(), 0u);
}

TEST(Cli, UsageErrorsAreNonZero) {
  EXPECT_NE(run_cli("frobnicate").exit_code, 0);
  EXPECT_NE(run_cli("parse").exit_code, 0);  // missing argument
  const fs::path dir = scratch_dir();
  const fs::path errfile = dir / "stderr.txt";
  const CliResult r = run_cli("parse /nonexistent.mini", errfile.string());
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(slurp(errfile).find("error"), std::string::npos);
}

TEST(Cli, ParseErrorIsReportedWithLocation) {
  const fs::path dir = scratch_dir();
  const fs::path bad = dir / "bad.mini";
  {
    std::ofstream out(bad);
    out << "fn f(): int {\n  return 1 +;\n}\n";
  }
  const fs::path errfile = dir / "stderr2.txt";
  const CliResult r = run_cli("parse " + bad.string(), errfile.string());
  EXPECT_EQ(r.exit_code, 2);
  const std::string err = slurp(errfile);
  EXPECT_NE(err.find("line 2"), std::string::npos);
}

}  // namespace
}  // namespace sbflbench
