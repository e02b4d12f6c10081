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

#ifndef SBFLBENCH_REPORT_HPP
#define SBFLBENCH_REPORT_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sbflbench/csv.hpp"
#include "sbflbench/minilang.hpp"
#include "sbflbench/pipeline.hpp"
#include "sbflbench/suite_io.hpp"
#include "sbflbench/suitegen.hpp"

namespace sbflbench {

//===----------------------------------------------------------------------===//
// Corpus manifest
//===----------------------------------------------------------------------===//

// manifest.json, version 1:
//   { "version": 1,
//     "programs": [
//       { "program": "p.mini", "manual": "p_manual.suite",
//         "generated": "p_gen.suite" },
//       { "program": "q.mini", "manual": "q_manual.suite",
//         "generate": { "seed": 42, "budget": 300, "minimize": true,
//                       "int_range": [-100, 100] } } ] }
// Paths are resolved relative to the manifest's directory. Each program has
// exactly one manual suite and one generated suite; the latter either frozen
// on disk or produced on the fly from the given seed.

struct ManifestGenSpec {
  GenConfig config;
  bool minimize = true;
};

struct ManifestEntry {
  std::string program_path;
  std::string manual_path;
  std::optional<std::string> generated_path;
  std::optional<ManifestGenSpec> generate;
};

struct CorpusManifest {
  int version = 1;
  std::vector<ManifestEntry> entries;
  std::string base_dir;
};

inline CorpusManifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open manifest '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("manifest '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("version") || !j["version"].is_number_integer())
    throw ConfigError("manifest '" + path + "': missing integer field \"version\"");
  CorpusManifest manifest;
  manifest.version = j["version"].get<int>();
  if (manifest.version != 1)
    throw ConfigError("manifest '" + path + "': unsupported version " +
                      std::to_string(manifest.version));
  manifest.base_dir = std::filesystem::path(path).parent_path().string();
  if (!j.contains("programs") || !j["programs"].is_array())
    throw ConfigError("manifest '" + path + "': missing array field \"programs\"");
  for (const auto& jp : j["programs"]) {
    ManifestEntry entry;
    if (!jp.contains("program") || !jp.contains("manual"))
      throw ConfigError("manifest '" + path + "': every entry needs \"program\" and \"manual\"");
    entry.program_path = jp["program"].get<std::string>();
    entry.manual_path = jp["manual"].get<std::string>();
    if (jp.contains("generated")) entry.generated_path = jp["generated"].get<std::string>();
    if (jp.contains("generate")) {
      const auto& jg = jp["generate"];
      ManifestGenSpec spec;
      if (!jg.contains("seed")) throw ConfigError("manifest generate spec needs a \"seed\"");
      spec.config.seed = jg["seed"].get<std::uint64_t>();
      if (jg.contains("budget")) spec.config.budget = jg["budget"].get<int>();
      if (jg.contains("per_function")) spec.config.per_function = jg["per_function"].get<bool>();
      if (jg.contains("int_range")) {
        spec.config.int_lo = jg["int_range"][0].get<std::int64_t>();
        spec.config.int_hi = jg["int_range"][1].get<std::int64_t>();
      }
      if (jg.contains("float_range")) {
        spec.config.float_lo = jg["float_range"][0].get<double>();
        spec.config.float_hi = jg["float_range"][1].get<double>();
      }
      if (jg.contains("step_limit")) spec.config.step_limit = jg["step_limit"].get<std::int64_t>();
      if (jg.contains("minimize")) spec.minimize = jg["minimize"].get<bool>();
      entry.generate = std::move(spec);
    }
    if (entry.generated_path.has_value() == entry.generate.has_value())
      throw ConfigError("manifest '" + path + "', program '" + entry.program_path +
                        "': exactly one of \"generated\" or \"generate\" is required");
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

inline std::string resolve_manifest_path(const CorpusManifest& manifest, const std::string& rel) {
  const std::filesystem::path p(rel);
  if (p.is_absolute() || manifest.base_dir.empty()) return rel;
  return (std::filesystem::path(manifest.base_dir) / p).string();
}

//===----------------------------------------------------------------------===//
// Comparison report
//===----------------------------------------------------------------------===//

struct MetricWilcoxon {
  int n = 0;  // programs with both values defined
  std::optional<WilcoxonResult> two_sided;
  std::optional<WilcoxonResult> a_greater;
  std::optional<WilcoxonResult> b_greater;
};

// Pooled per-stratum (nesting depth or mutation operator) rScore data across
// all programs: box-plot summaries per suite over its scored mutants, plus a
// Wilcoxon test over mutants killed by both suites.
struct StratumStats {
  std::optional<DistributionSummary> a_summary;
  std::optional<DistributionSummary> b_summary;
  int pair_count = 0;
  std::optional<WilcoxonResult> wilcoxon_two_sided;
};

struct ComparisonReport {
  std::vector<SuiteComparison> rows;  // manifest order; A = manual, B = generated
  std::vector<std::pair<std::string, std::string>> excluded;  // (program, reason)
  MetricWilcoxon statement_cov;
  MetricWilcoxon branch_cov;
  MetricWilcoxon sbfl;
  std::map<int, StratumStats> by_depth;
  std::map<MutationOperator, StratumStats> by_operator;
};

struct RunOptions {
  std::int64_t step_limit = kDefaultStepLimit;
  int jobs = 1;
};

namespace detail {

inline MetricWilcoxon metric_wilcoxon(const std::vector<double>& a, const std::vector<double>& b) {
  MetricWilcoxon mw;
  mw.n = static_cast<int>(a.size());
  if (a.empty()) return mw;
  PairedSample sample;
  sample.a_values = a;
  sample.b_values = b;
  mw.two_sided = wilcoxon_signed_rank(sample, Alternative::TwoSided);
  mw.a_greater = wilcoxon_signed_rank(sample, Alternative::AGreater);
  mw.b_greater = wilcoxon_signed_rank(sample, Alternative::BGreater);
  return mw;
}

template <typename Key>
void pool_strata(const ComparisonReport& report,
                 const std::function<Key(const MutantResult&)>& key_of,
                 std::map<Key, StratumStats>& out) {
  std::map<Key, std::vector<double>> a_scored, b_scored;
  std::map<Key, std::pair<std::vector<double>, std::vector<double>>> pairs;
  for (const SuiteComparison& row : report.rows) {
    for (const MutantResult& m : row.score_a.mutant_results)
      if (m.killed) a_scored[key_of(m)].push_back(*m.rscore);
    for (const MutantResult& m : row.score_b.mutant_results)
      if (m.killed) b_scored[key_of(m)].push_back(*m.rscore);
    for (std::size_t i = 0; i < row.paired.mutant_ids.size(); ++i) {
      const MutantResult& m =
          row.score_a.mutant_results[static_cast<std::size_t>(row.paired.mutant_ids[i])];
      auto& bucket = pairs[key_of(m)];
      bucket.first.push_back(row.paired.a_rscores[i]);
      bucket.second.push_back(row.paired.b_rscores[i]);
    }
  }
  for (const auto& [key, values] : a_scored) out[key].a_summary = summarize(values);
  for (const auto& [key, values] : b_scored) out[key].b_summary = summarize(values);
  for (const auto& [key, ab] : pairs) {
    StratumStats& s = out[key];
    s.pair_count = static_cast<int>(ab.first.size());
    PairedSample sample;
    sample.a_values = ab.first;
    sample.b_values = ab.second;
    s.wilcoxon_two_sided = wilcoxon_signed_rank(sample, Alternative::TwoSided);
  }
}

}  // namespace detail

/// Runs the full comparison over a corpus manifest. A program that fails to
/// parse (or whose suites fail to load or validate) becomes an exclusion row
/// and the run continues.
inline ComparisonReport run_experiment(const CorpusManifest& manifest,
                                       const RunOptions& options = {}) {
  ComparisonReport report;
  for (const ManifestEntry& entry : manifest.entries) {
    try {
      const Program program = parse_file(resolve_manifest_path(manifest, entry.program_path));
      TestSuite manual = load_suite(resolve_manifest_path(manifest, entry.manual_path));
      if (manual.origin != SuiteOrigin::Manual)
        throw ConfigError("suite '" + entry.manual_path + "' is not tagged manual");
      TestSuite generated;
      if (entry.generated_path) {
        generated = load_suite(resolve_manifest_path(manifest, *entry.generated_path));
        if (generated.origin != SuiteOrigin::Generated)
          throw ConfigError("suite '" + *entry.generated_path + "' is not tagged generated");
      } else {
        GenConfig cfg = entry.generate->config;
        if (cfg.step_limit == kDefaultStepLimit) cfg.step_limit = options.step_limit;
        generated = generate_suite(program, cfg);
        if (entry.generate->minimize) generated = minimize_suite(program, generated, cfg.step_limit);
      }
      validate_suite(program, manual);
      validate_suite(program, generated);
      SuiteComparison cmp =
          compare_suites(program, manual, generated, options.step_limit, options.jobs);
      cmp.program_id = entry.program_path;  // keep ids as written in the manifest
      report.rows.push_back(std::move(cmp));
    } catch (const ParseError& e) {
      report.excluded.emplace_back(entry.program_path, e.what());
    } catch (const ConfigError& e) {
      report.excluded.emplace_back(entry.program_path, e.what());
    }
  }

  std::vector<double> stmt_a, stmt_b, branch_a, branch_b, sbfl_a, sbfl_b;
  for (const SuiteComparison& row : report.rows) {
    stmt_a.push_back(row.statement_coverage_a);
    stmt_b.push_back(row.statement_coverage_b);
    branch_a.push_back(row.branch_coverage_a);
    branch_b.push_back(row.branch_coverage_b);
    if (row.score_a.sbfl_score && row.score_b.sbfl_score) {
      sbfl_a.push_back(*row.score_a.sbfl_score);
      sbfl_b.push_back(*row.score_b.sbfl_score);
    }
  }
  report.statement_cov = detail::metric_wilcoxon(stmt_a, stmt_b);
  report.branch_cov = detail::metric_wilcoxon(branch_a, branch_b);
  report.sbfl = detail::metric_wilcoxon(sbfl_a, sbfl_b);

  detail::pool_strata<int>(report, [](const MutantResult& m) { return m.fault_depth; },
                           report.by_depth);
  detail::pool_strata<MutationOperator>(report, [](const MutantResult& m) { return m.op; },
                                        report.by_operator);
  return report;
}

//===----------------------------------------------------------------------===//
// JSON serialization
//===----------------------------------------------------------------------===//

inline nlohmann::ordered_json to_json(const DistributionSummary& s) {
  return nlohmann::ordered_json{{"count", s.count}, {"mean", s.mean}, {"min", s.min},
                                {"q1", s.q1},       {"median", s.median}, {"q3", s.q3},
                                {"max", s.max}};
}

inline nlohmann::ordered_json to_json(const WilcoxonResult& w) {
  return nlohmann::ordered_json{{"n_effective", w.n_effective},
                                {"w_statistic", w.w_statistic},
                                {"p_value", w.p_value},
                                {"alternative", to_string(w.alternative)},
                                {"method", to_string(w.method)},
                                {"z", w.z},
                                {"effect_size_r", w.effect_size_r},
                                {"degenerate", w.degenerate}};
}

inline nlohmann::ordered_json to_json(const MetricWilcoxon& mw) {
  nlohmann::ordered_json j;
  j["n"] = mw.n;
  j["two_sided"] = mw.two_sided ? to_json(*mw.two_sided) : nlohmann::ordered_json(nullptr);
  j["a_greater"] = mw.a_greater ? to_json(*mw.a_greater) : nlohmann::ordered_json(nullptr);
  j["b_greater"] = mw.b_greater ? to_json(*mw.b_greater) : nlohmann::ordered_json(nullptr);
  return j;
}

inline nlohmann::ordered_json score_summary_json(const SbflScoreResult& score) {
  nlohmann::ordered_json j;
  j["suite"] = score.suite_name;
  j["sbfl_score"] = score.sbfl_score ? nlohmann::ordered_json(*score.sbfl_score)
                                     : nlohmann::ordered_json(nullptr);
  if (!score.diagnostic.empty()) j["diagnostic"] = score.diagnostic;
  j["mutants_total"] = score.mutants_total;
  j["mutants_killed"] = score.mutants_killed;
  j["mutants_excluded"] = score.mutants_excluded;
  nlohmann::ordered_json by_depth = nlohmann::ordered_json::object();
  for (const auto& [depth, summary] : score.by_depth)
    by_depth[std::to_string(depth)] = to_json(summary);
  j["by_depth"] = std::move(by_depth);
  nlohmann::ordered_json by_op = nlohmann::ordered_json::object();
  for (const auto& [op, summary] : score.by_operator) by_op[to_string(op)] = to_json(summary);
  j["by_operator"] = std::move(by_op);
  return j;
}

inline nlohmann::ordered_json mutant_pair_json(const MutantResult& a, const MutantResult& b) {
  const auto side = [](const MutantResult& m) {
    nlohmann::ordered_json j;
    j["killed"] = m.killed;
    j["fault_in_universe"] = m.fault_in_universe;
    j["universe_size"] = m.universe_size;
    j["rank"] = m.rank ? nlohmann::ordered_json(*m.rank) : nlohmann::ordered_json(nullptr);
    j["rscore"] = m.rscore ? nlohmann::ordered_json(*m.rscore) : nlohmann::ordered_json(nullptr);
    if (!m.killed) j["excluded"] = "survived";
    return j;
  };
  nlohmann::ordered_json j;
  j["id"] = a.mutant_id;
  j["operator"] = to_string(a.op);
  j["statement"] = a.fault_statement;
  j["depth"] = a.fault_depth;
  j["a"] = side(a);
  j["b"] = side(b);
  return j;
}

inline nlohmann::ordered_json to_json(const ComparisonReport& report) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["suite_roles"] = {{"a", "manual"}, {"b", "generated"}};

  nlohmann::ordered_json programs = nlohmann::ordered_json::array();
  for (const SuiteComparison& row : report.rows) {
    nlohmann::ordered_json jr;
    jr["program"] = row.program_id;
    jr["suite_a"] = row.suite_a;
    jr["suite_b"] = row.suite_b;
    jr["statement_coverage"] = {{"a", row.statement_coverage_a}, {"b", row.statement_coverage_b}};
    jr["branch_coverage"] = {{"a", row.branch_coverage_a}, {"b", row.branch_coverage_b}};
    jr["sbfl_a"] = score_summary_json(row.score_a);
    jr["sbfl_b"] = score_summary_json(row.score_b);
    nlohmann::ordered_json mutants = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < row.score_a.mutant_results.size(); ++i)
      mutants.push_back(mutant_pair_json(row.score_a.mutant_results[i],
                                         row.score_b.mutant_results[i]));
    jr["mutants"] = std::move(mutants);
    jr["kills"] = {{"both", row.killed_by_both},
                   {"only_a", row.killed_only_a},
                   {"only_b", row.killed_only_b},
                   {"neither", row.survived_both}};
    programs.push_back(std::move(jr));
  }
  j["programs"] = std::move(programs);

  nlohmann::ordered_json excluded = nlohmann::ordered_json::array();
  for (const auto& [program, reason] : report.excluded)
    excluded.push_back({{"program", program}, {"reason", reason}});
  j["excluded"] = std::move(excluded);

  const auto mean_of = [](const std::vector<double>& v) {
    double sum = 0.0;
    for (const double x : v) sum += x;
    return v.empty() ? nlohmann::ordered_json(nullptr)
                     : nlohmann::ordered_json(sum / static_cast<double>(v.size()));
  };
  std::vector<double> stmt_a, stmt_b, branch_a, branch_b, sbfl_a, sbfl_b;
  for (const SuiteComparison& row : report.rows) {
    stmt_a.push_back(row.statement_coverage_a);
    stmt_b.push_back(row.statement_coverage_b);
    branch_a.push_back(row.branch_coverage_a);
    branch_b.push_back(row.branch_coverage_b);
    if (row.score_a.sbfl_score) sbfl_a.push_back(*row.score_a.sbfl_score);
    if (row.score_b.sbfl_score) sbfl_b.push_back(*row.score_b.sbfl_score);
  }
  j["aggregate"] = {
      {"programs", report.rows.size()},
      {"statement_coverage", {{"a_mean", mean_of(stmt_a)}, {"b_mean", mean_of(stmt_b)}}},
      {"branch_coverage", {{"a_mean", mean_of(branch_a)}, {"b_mean", mean_of(branch_b)}}},
      {"sbfl_score",
       {{"a_mean", mean_of(sbfl_a)},
        {"b_mean", mean_of(sbfl_b)},
        {"a_defined", sbfl_a.size()},
        {"b_defined", sbfl_b.size()}}},
  };

  j["wilcoxon"] = {{"statement_coverage", to_json(report.statement_cov)},
                   {"branch_coverage", to_json(report.branch_cov)},
                   {"sbfl_score", to_json(report.sbfl)}};

  const auto stratum_json = [](const StratumStats& s) {
    nlohmann::ordered_json js;
    js["a"] = s.a_summary ? to_json(*s.a_summary) : nlohmann::ordered_json(nullptr);
    js["b"] = s.b_summary ? to_json(*s.b_summary) : nlohmann::ordered_json(nullptr);
    js["pair_count"] = s.pair_count;
    js["wilcoxon_two_sided"] =
        s.wilcoxon_two_sided ? to_json(*s.wilcoxon_two_sided) : nlohmann::ordered_json(nullptr);
    js["effect_size_r"] = s.wilcoxon_two_sided
                              ? nlohmann::ordered_json(s.wilcoxon_two_sided->effect_size_r)
                              : nlohmann::ordered_json(nullptr);
    return js;
  };
  nlohmann::ordered_json by_depth = nlohmann::ordered_json::object();
  for (const auto& [depth, stats] : report.by_depth)
    by_depth[std::to_string(depth)] = stratum_json(stats);
  j["by_depth"] = std::move(by_depth);
  nlohmann::ordered_json by_op = nlohmann::ordered_json::object();
  for (const auto& [op, stats] : report.by_operator) by_op[to_string(op)] = stratum_json(stats);
  j["by_operator"] = std::move(by_op);
  return j;
}

//===----------------------------------------------------------------------===//
// CSV emission
//===----------------------------------------------------------------------===//

inline std::string report_csv(const ComparisonReport& report) {
  CsvWriter csv({"program", "suite_a", "suite_b", "statement_cov_a", "statement_cov_b",
                 "branch_cov_a", "branch_cov_b", "sbfl_score_a", "sbfl_score_b", "killed_a",
                 "killed_b", "mutants_total"});
  for (const SuiteComparison& row : report.rows) {
    csv.write_row({row.program_id, row.suite_a, row.suite_b,
                   format_number(row.statement_coverage_a), format_number(row.statement_coverage_b),
                   format_number(row.branch_coverage_a), format_number(row.branch_coverage_b),
                   row.score_a.sbfl_score ? format_number(*row.score_a.sbfl_score) : "",
                   row.score_b.sbfl_score ? format_number(*row.score_b.sbfl_score) : "",
                   std::to_string(row.score_a.mutants_killed),
                   std::to_string(row.score_b.mutants_killed),
                   std::to_string(row.score_a.mutants_total)});
  }
  return csv.str();
}

inline std::string mutants_csv(const ComparisonReport& report) {
  CsvWriter csv({"program", "mutant_id", "operator", "statement", "depth", "killed_a", "rank_a",
                 "universe_a", "rscore_a", "killed_b", "rank_b", "universe_b", "rscore_b"});
  const auto opt_int = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  const auto opt_num = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
  };
  for (const SuiteComparison& row : report.rows) {
    for (std::size_t i = 0; i < row.score_a.mutant_results.size(); ++i) {
      const MutantResult& a = row.score_a.mutant_results[i];
      const MutantResult& b = row.score_b.mutant_results[i];
      csv.write_row({row.program_id, std::to_string(a.mutant_id), to_string(a.op),
                     std::to_string(a.fault_statement), std::to_string(a.fault_depth),
                     a.killed ? "true" : "false", opt_int(a.rank), std::to_string(a.universe_size),
                     opt_num(a.rscore), b.killed ? "true" : "false", opt_int(b.rank),
                     std::to_string(b.universe_size), opt_num(b.rscore)});
    }
  }
  return csv.str();
}

inline std::string boxplot_csv(const ComparisonReport& report, bool by_depth) {
  CsvWriter csv({"suite", by_depth ? "depth" : "operator", "count", "mean", "min", "q1", "median",
                 "q3", "max"});
  const auto emit = [&csv](const std::string& suite, const std::string& stratum,
                           const std::optional<DistributionSummary>& summary) {
    if (!summary) return;
    csv.write_row({suite, stratum, std::to_string(summary->count), format_number(summary->mean),
                   format_number(summary->min), format_number(summary->q1),
                   format_number(summary->median), format_number(summary->q3),
                   format_number(summary->max)});
  };
  if (by_depth) {
    for (const auto& [depth, stats] : report.by_depth)
      emit("manual", std::to_string(depth), stats.a_summary);
    for (const auto& [depth, stats] : report.by_depth)
      emit("generated", std::to_string(depth), stats.b_summary);
  } else {
    for (const auto& [op, stats] : report.by_operator) emit("manual", to_string(op), stats.a_summary);
    for (const auto& [op, stats] : report.by_operator)
      emit("generated", to_string(op), stats.b_summary);
  }
  return csv.str();
}

inline std::string excluded_csv(const ComparisonReport& report) {
  CsvWriter csv({"program", "reason"});
  for (const auto& [program, reason] : report.excluded) csv.write_row({program, reason});
  return csv.str();
}

/// Writes report.json, report.csv, mutants.csv, boxplot_depth.csv,
/// boxplot_operator.csv and excluded.csv. Output is byte-deterministic for a
/// fixed manifest regardless of --jobs.
inline void write_report_files(const ComparisonReport& report, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto write = [&out_dir](const std::string& name, const std::string& content) {
    const std::string path = (std::filesystem::path(out_dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write report file '" + path + "'");
    out << content;
  };
  write("report.json", to_json(report).dump(2) + "\n");
  write("report.csv", report_csv(report));
  write("mutants.csv", mutants_csv(report));
  write("boxplot_depth.csv", boxplot_csv(report, true));
  write("boxplot_operator.csv", boxplot_csv(report, false));
  write("excluded.csv", excluded_csv(report));
}

}  // namespace sbflbench

#endif  // SBFLBENCH_REPORT_HPP
