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
// Command-line front end: measures how well test suites support
// spectrum-based fault localization and coverage on MiniLang programs, and
// statistically compares two suites per program.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sbflbench/sbflbench.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sbflbench;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file '" + out_path + "'");
  out << content;
}

int default_jobs() {
  if (const char* env = std::getenv("SBFLBENCH_JOBS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

ordered_json statement_table_json(const Program& program) {
  ordered_json j;
  j["program"] = program.source_name;
  j["functions"] = ordered_json::array();
  for (const auto& fn : program.functions) {
    ordered_json jf;
    jf["name"] = fn.name;
    jf["params"] = ordered_json::array();
    for (const auto& p : fn.params) jf["params"].push_back({{"name", p.name}, {"type", to_string(p.type)}});
    jf["returns"] = fn.return_type ? to_string(*fn.return_type) : "void";
    j["functions"].push_back(std::move(jf));
  }
  j["statements"] = ordered_json::array();
  for (const StatementInfo& s : enumerate_statements(program)) {
    j["statements"].push_back({{"id", s.id},
                               {"line", s.loc.line},
                               {"column", s.loc.column},
                               {"kind", to_string(s.kind)},
                               {"depth", s.nesting_depth},
                               {"function", s.enclosing_function}});
  }
  j["branches"] = ordered_json::array();
  for (const BranchInfo& b : enumerate_branches(program))
    j["branches"].push_back(
        {{"id", b.id}, {"statement", b.owning_statement}, {"arm", b.arm ? "true" : "false"}});
  return j;
}

std::string statement_table_csv(const Program& program) {
  CsvWriter csv({"id", "line", "column", "kind", "depth", "function"});
  for (const StatementInfo& s : enumerate_statements(program))
    csv.write_row({std::to_string(s.id), std::to_string(s.loc.line), std::to_string(s.loc.column),
                   to_string(s.kind), std::to_string(s.nesting_depth), s.enclosing_function});
  return csv.str();
}

ordered_json mutant_manifest_json(const Program& program) {
  ordered_json arr = ordered_json::array();
  const auto sites = enumerate_mutation_sites(program);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const MutationSite& site = sites[i];
    arr.push_back({{"id", i},
                   {"operator", to_string(site.op)},
                   {"statement", site.statement},
                   {"line", site.loc.line},
                   {"column", site.loc.column},
                   {"description", site.description},
                   {"depth", statement_depth(program, site.statement)}});
  }
  return arr;
}

std::string mutant_manifest_csv(const Program& program) {
  CsvWriter csv({"id", "operator", "statement", "line", "column", "description", "depth"});
  const auto sites = enumerate_mutation_sites(program);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const MutationSite& site = sites[i];
    csv.write_row({std::to_string(i), to_string(site.op), std::to_string(site.statement),
                   std::to_string(site.loc.line), std::to_string(site.loc.column),
                   site.description, std::to_string(statement_depth(program, site.statement))});
  }
  return csv.str();
}

ordered_json mutant_result_json(const MutantResult& m) {
  ordered_json j;
  j["id"] = m.mutant_id;
  j["operator"] = to_string(m.op);
  j["statement"] = m.fault_statement;
  j["depth"] = m.fault_depth;
  j["killed"] = m.killed;
  j["fault_in_universe"] = m.fault_in_universe;
  j["universe_size"] = m.universe_size;
  j["rank"] = m.rank ? ordered_json(*m.rank) : ordered_json(nullptr);
  j["rscore"] = m.rscore ? ordered_json(*m.rscore) : ordered_json(nullptr);
  if (!m.killed) j["excluded"] = "survived";
  return j;
}

ordered_json score_to_json(const SbflScoreResult& score, const std::string& program_id) {
  ordered_json j = score_summary_json(score);
  j["program"] = program_id;
  ordered_json mutants = ordered_json::array();
  for (const MutantResult& m : score.mutant_results) mutants.push_back(mutant_result_json(m));
  j["mutants"] = std::move(mutants);
  return j;
}

std::string score_mutants_csv(const SbflScoreResult& score, const std::string& program_id) {
  CsvWriter csv({"program", "mutant_id", "operator", "statement", "depth", "killed", "rank",
                 "universe", "rscore"});
  for (const MutantResult& m : score.mutant_results)
    csv.write_row({program_id, std::to_string(m.mutant_id), to_string(m.op),
                   std::to_string(m.fault_statement), std::to_string(m.fault_depth),
                   m.killed ? "true" : "false", m.rank ? std::to_string(*m.rank) : "",
                   std::to_string(m.universe_size), m.rscore ? format_number(*m.rscore) : ""});
  return csv.str();
}

std::string ranked_csv(const Program& program, const CoverageSpectrum& spectrum) {
  const SuspiciousnessTable table = build_table(spectrum);
  std::string out = "statement,line,fail,pass,susp,rank,rscore\n";
  if (table.executed_statements.empty()) return out;
  const RankedStatements ranked = rank_statements(table);
  std::unordered_map<StatementId, int> lines;
  for (const StatementInfo& s : enumerate_statements(program)) lines.emplace(s.id, s.loc.line);
  std::vector<StatementId> order = table.executed_statements;
  std::sort(order.begin(), order.end(), [&](StatementId a, StatementId b) {
    const int ra = ranked.ranks.at(a), rb = ranked.ranks.at(b);
    return ra != rb ? ra < rb : a < b;
  });
  CsvWriter csv({"statement", "line", "fail", "pass", "susp", "rank", "rscore"});
  std::string body;
  for (const StatementId id : order) {
    const SuspiciousnessEntry& e = table.entries.at(id);
    const int rank = ranked.ranks.at(id);
    body += std::to_string(id) + "," + std::to_string(lines.at(id)) + "," +
            std::to_string(e.fail_count) + "," + std::to_string(e.pass_count) + "," +
            format_number(e.susp) + "," + std::to_string(rank) + "," +
            format_number(rscore(rank, ranked.universe_size)) + "\n";
  }
  return out + body;
}

PairedSample read_paired_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open CSV file '" + path + "'");
  PairedSample sample;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw ConfigError("stats CSV '" + path + "': expected two comma-separated columns");
    const std::string a = line.substr(0, comma);
    const std::string b = line.substr(comma + 1);
    try {
      const double av = std::stod(a);
      const double bv = std::stod(b);
      sample.a_values.push_back(av);
      sample.b_values.push_back(bv);
    } catch (const std::exception&) {
      if (first) {
        first = false;
        continue;  // tolerate a header row
      }
      throw ConfigError("stats CSV '" + path + "': non-numeric row '" + line + "'");
    }
    first = false;
  }
  if (sample.a_values.empty()) throw ConfigError("stats CSV '" + path + "' contains no data rows");
  return sample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sbflbench: SBFL-score and coverage comparison workbench for MiniLang"};
  app.require_subcommand(1);

  std::int64_t step_limit = kDefaultStepLimit;
  int jobs = default_jobs();
  std::string out_path;
  std::string format = "json";

  // parse
  std::string prog_path;
  auto* cmd_parse = app.add_subcommand("parse", "Parse a program; list statements and branches");
  cmd_parse->add_option("program", prog_path, "MiniLang source file")->required();
  cmd_parse->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd_parse->add_option("--out", out_path, "write output to a file instead of stdout");
  cmd_parse->callback([&]() {
    const Program program = parse_file(prog_path);
    emit(format == "csv" ? statement_table_csv(program)
                         : statement_table_json(program).dump(2) + "\n",
         out_path);
  });

  // coverage
  std::string suite_path;
  std::string cov_format = "text";
  auto* cmd_coverage = app.add_subcommand("coverage", "Statement and branch coverage of a suite");
  cmd_coverage->add_option("program", prog_path, "MiniLang source file")->required();
  cmd_coverage->add_option("suite", suite_path, ".suite file")->required();
  cmd_coverage->add_option("--step-limit", step_limit, "interpreter steps per test");
  cmd_coverage->add_option("--format", cov_format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd_coverage->add_option("--out", out_path, "write output to a file instead of stdout");
  cmd_coverage->callback([&]() {
    const Program program = parse_file(prog_path);
    const TestSuite suite = load_suite(suite_path);
    const CoverageSpectrum spectrum = run_suite(program, suite, step_limit);
    const double stmt = statement_coverage(spectrum);
    const double branch = branch_coverage(spectrum);
    if (cov_format == "json") {
      emit(ordered_json{{"program", prog_path},
                        {"suite", suite.name},
                        {"statement_coverage", stmt},
                        {"branch_coverage", branch}}
                   .dump(2) +
               "\n",
           out_path);
    } else if (cov_format == "csv") {
      CsvWriter csv({"program", "suite", "statement_coverage", "branch_coverage"});
      csv.write_row({prog_path, suite.name, format_number(stmt), format_number(branch)});
      emit(csv.str(), out_path);
    } else {
      const auto with_decimal = [](double v) {
        std::string s = format_number(v);
        if (s.find('.') == std::string::npos && s.find('e') == std::string::npos) s += ".0";
        return s;
      };
      emit("statement " + with_decimal(stmt) + "\nbranch " + with_decimal(branch) + "\n", out_path);
    }
  });

  // mutants
  auto* cmd_mutants = app.add_subcommand("mutants", "Enumerate mutation sites as a manifest");
  cmd_mutants->add_option("program", prog_path, "MiniLang source file")->required();
  cmd_mutants->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd_mutants->add_option("--out", out_path, "write output to a file instead of stdout");
  cmd_mutants->callback([&]() {
    const Program program = parse_file(prog_path);
    emit(format == "csv" ? mutant_manifest_csv(program)
                         : mutant_manifest_json(program).dump(2) + "\n",
         out_path);
  });

  // sbfl
  int mutant_id = -1;
  auto* cmd_sbfl =
      app.add_subcommand("sbfl", "Ranked-statement suspiciousness CSV for a suite run");
  cmd_sbfl->add_option("program", prog_path, "MiniLang source file")->required();
  cmd_sbfl->add_option("suite", suite_path, ".suite file")->required();
  cmd_sbfl->add_option("--mutant", mutant_id, "run against this mutant instead of the original");
  cmd_sbfl->add_option("--step-limit", step_limit, "interpreter steps per test");
  cmd_sbfl->add_option("--out", out_path, "write output to a file instead of stdout");
  cmd_sbfl->callback([&]() {
    const Program program = parse_file(prog_path);
    const TestSuite suite = load_suite(suite_path);
    if (mutant_id < 0) {
      emit(ranked_csv(program, run_suite(program, suite, step_limit)), out_path);
      return;
    }
    const std::vector<Mutant> mutants = generate_all_mutants(program);
    if (mutant_id >= static_cast<int>(mutants.size()))
      throw ConfigError("mutant id " + std::to_string(mutant_id) + " out of range (program has " +
                        std::to_string(mutants.size()) + " mutants)");
    const Mutant& m = mutants[static_cast<std::size_t>(mutant_id)];
    std::cerr << "mutant " << m.id << ": " << to_string(m.site.op) << " at statement "
              << m.fault_statement << " (" << m.site.description << ")\n";
    emit(ranked_csv(program, run_suite(m.mutated_program, suite, step_limit)), out_path);
  });

  // score
  std::string mutants_csv_path;
  auto* cmd_score = app.add_subcommand("score", "SBFL score of a suite (Fig-style pipeline)");
  cmd_score->add_option("program", prog_path, "MiniLang source file")->required();
  cmd_score->add_option("suite", suite_path, ".suite file")->required();
  cmd_score->add_option("--step-limit", step_limit, "interpreter steps per test");
  cmd_score->add_option("--jobs", jobs, "parallel mutant evaluations");
  cmd_score->add_option("--out", out_path, "write JSON output to a file instead of stdout");
  cmd_score->add_option("--mutants-csv", mutants_csv_path, "also write per-mutant rows as CSV");
  cmd_score->callback([&]() {
    const Program program = parse_file(prog_path);
    const TestSuite suite = load_suite(suite_path);
    const SbflScoreResult score = sbfl_score(program, suite, step_limit, jobs);
    emit(score_to_json(score, prog_path).dump(2) + "\n", out_path);
    if (!mutants_csv_path.empty()) emit(score_mutants_csv(score, prog_path), mutants_csv_path);
  });

  // gen
  GenConfig gen_cfg;
  bool gen_minimize = false;
  std::string gen_out;
  std::pair<std::int64_t, std::int64_t> int_range{-100, 100};
  std::pair<double, double> float_range{-100.0, 100.0};
  auto* cmd_gen = app.add_subcommand("gen", "Generate a coverage-guided random suite");
  cmd_gen->add_option("program", prog_path, "MiniLang source file")->required();
  cmd_gen->add_option("-o,--out", gen_out, "output .suite path")->required();
  cmd_gen->add_option("--seed", gen_cfg.seed, "RNG seed")->required();
  cmd_gen->add_option("--budget", gen_cfg.budget, "candidate executions to attempt");
  cmd_gen->add_option("--int-range", int_range, "int argument range (lo hi)");
  cmd_gen->add_option("--float-range", float_range, "float argument range (lo hi)");
  cmd_gen->add_option("--step-limit", gen_cfg.step_limit, "interpreter steps per test");
  cmd_gen->add_flag("--per-function", gen_cfg.per_function,
                    "target functions round-robin instead of randomly");
  cmd_gen->add_flag("--minimize", gen_minimize, "drop cases that do not affect union coverage");
  cmd_gen->add_option("--name", gen_cfg.suite_name, "suite name to record");
  cmd_gen->callback([&]() {
    const Program program = parse_file(prog_path);
    gen_cfg.int_lo = int_range.first;
    gen_cfg.int_hi = int_range.second;
    gen_cfg.float_lo = float_range.first;
    gen_cfg.float_hi = float_range.second;
    TestSuite suite = generate_suite(program, gen_cfg);
    if (gen_minimize) suite = minimize_suite(program, suite, gen_cfg.step_limit);
    save_suite(suite, gen_out);
    std::cerr << "wrote " << gen_out << " (" << suite.cases.size() << " cases)\n";
  });

  // stats
  std::string csv_path;
  auto* cmd_stats = app.add_subcommand("stats", "Wilcoxon signed-rank test on a two-column CSV");
  cmd_stats->add_option("csv", csv_path, "CSV with paired a,b columns (header optional)")
      ->required();
  cmd_stats->add_option("--out", out_path, "write output to a file instead of stdout");
  cmd_stats->callback([&]() {
    const PairedSample sample = read_paired_csv(csv_path);
    ordered_json j;
    j["n"] = sample.a_values.size();
    j["a_summary"] = to_json(summarize(sample.a_values));
    j["b_summary"] = to_json(summarize(sample.b_values));
    j["two_sided"] = to_json(wilcoxon_signed_rank(sample, Alternative::TwoSided));
    j["a_greater"] = to_json(wilcoxon_signed_rank(sample, Alternative::AGreater));
    j["b_greater"] = to_json(wilcoxon_signed_rank(sample, Alternative::BGreater));
    emit(j.dump(2) + "\n", out_path);
  });

  // compare
  std::string suite_a_path, suite_b_path;
  auto* cmd_compare = app.add_subcommand("compare", "Compare two suites on one program");
  cmd_compare->add_option("program", prog_path, "MiniLang source file")->required();
  cmd_compare->add_option("suite_a", suite_a_path, "first .suite file")->required();
  cmd_compare->add_option("suite_b", suite_b_path, "second .suite file")->required();
  cmd_compare->add_option("--step-limit", step_limit, "interpreter steps per test");
  cmd_compare->add_option("--jobs", jobs, "parallel mutant evaluations");
  cmd_compare->add_option("--out", out_path, "write JSON output to a file instead of stdout");
  cmd_compare->add_option("--mutants-csv", mutants_csv_path, "also write per-mutant rows as CSV");
  cmd_compare->callback([&]() {
    const Program program = parse_file(prog_path);
    const TestSuite a = load_suite(suite_a_path);
    const TestSuite b = load_suite(suite_b_path);
    const SuiteComparison cmp = compare_suites(program, a, b, step_limit, jobs);
    ordered_json j;
    j["program"] = prog_path;
    j["suite_a"] = cmp.suite_a;
    j["suite_b"] = cmp.suite_b;
    j["statement_coverage"] = {{"a", cmp.statement_coverage_a}, {"b", cmp.statement_coverage_b}};
    j["branch_coverage"] = {{"a", cmp.branch_coverage_a}, {"b", cmp.branch_coverage_b}};
    j["sbfl_a"] = score_summary_json(cmp.score_a);
    j["sbfl_b"] = score_summary_json(cmp.score_b);
    j["kills"] = {{"both", cmp.killed_by_both},
                  {"only_a", cmp.killed_only_a},
                  {"only_b", cmp.killed_only_b},
                  {"neither", cmp.survived_both}};
    ordered_json mutants = ordered_json::array();
    for (std::size_t i = 0; i < cmp.score_a.mutant_results.size(); ++i)
      mutants.push_back(mutant_pair_json(cmp.score_a.mutant_results[i],
                                         cmp.score_b.mutant_results[i]));
    j["mutants"] = std::move(mutants);
    if (!cmp.paired.mutant_ids.empty()) {
      PairedSample sample;
      sample.a_values = cmp.paired.a_rscores;
      sample.b_values = cmp.paired.b_rscores;
      j["rscore_wilcoxon"] = {{"pairs", cmp.paired.mutant_ids.size()},
                              {"two_sided", to_json(wilcoxon_signed_rank(sample))}};
    }
    emit(j.dump(2) + "\n", out_path);
    if (!mutants_csv_path.empty()) {
      ComparisonReport one;
      one.rows.push_back(cmp);
      emit(mutants_csv(one), mutants_csv_path);
    }
  });

  // run
  std::string manifest_path, out_dir = "report";
  auto* cmd_run = app.add_subcommand("run", "Run the full experiment over a corpus manifest");
  cmd_run->add_option("manifest", manifest_path, "manifest.json")->required();
  cmd_run->add_option("--out-dir", out_dir, "directory for report files");
  cmd_run->add_option("--step-limit", step_limit, "interpreter steps per test");
  cmd_run->add_option("--jobs", jobs, "parallel mutant evaluations (env SBFLBENCH_JOBS)");
  cmd_run->callback([&]() {
    const CorpusManifest manifest = load_manifest(manifest_path);
    RunOptions options;
    options.step_limit = step_limit;
    options.jobs = jobs;
    const ComparisonReport report = run_experiment(manifest, options);
    write_report_files(report, out_dir);
    std::cout << "wrote " << out_dir << " (" << report.rows.size() << " programs, "
              << report.excluded.size() << " excluded)\n";
  });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
