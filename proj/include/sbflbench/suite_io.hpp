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

#ifndef SBFLBENCH_SUITE_IO_HPP
#define SBFLBENCH_SUITE_IO_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "sbflbench/interp.hpp"

namespace sbflbench {

// .suite files are JSON:
//   { "name": str, "origin": "manual"|"generated",
//     "cases": [ { "name": str,
//                  "call": { "function": str, "args": [typed literal] },
//                  "expect": { "returns": typed literal } | "runs" } ] }
// where a typed literal is {"int": 3}, {"float": 1.5} or {"bool": true}.

inline nlohmann::ordered_json value_to_json(const Value& v) {
  nlohmann::ordered_json j;
  if (const auto* i = std::get_if<std::int64_t>(&v)) j["int"] = *i;
  else if (const auto* f = std::get_if<double>(&v)) j["float"] = *f;
  else j["bool"] = std::get<bool>(v);
  return j;
}

inline Value value_from_json(const nlohmann::json& j, const std::string& context) {
  if (!j.is_object() || j.size() != 1)
    throw ConfigError(context + ": typed literal must be a single-key object like {\"int\": 3}");
  if (j.contains("int")) {
    if (!j["int"].is_number_integer())
      throw ConfigError(context + ": \"int\" literal must be an integer");
    return j["int"].get<std::int64_t>();
  }
  if (j.contains("float")) {
    if (!j["float"].is_number())
      throw ConfigError(context + ": \"float\" literal must be a number");
    return j["float"].get<double>();
  }
  if (j.contains("bool")) {
    if (!j["bool"].is_boolean())
      throw ConfigError(context + ": \"bool\" literal must be true or false");
    return j["bool"].get<bool>();
  }
  throw ConfigError(context + ": typed literal key must be \"int\", \"float\" or \"bool\"");
}

inline TestSuite suite_from_json(const nlohmann::json& j, const std::string& context = "suite") {
  if (!j.is_object()) throw ConfigError(context + ": expected a JSON object");
  TestSuite suite;
  if (!j.contains("name") || !j["name"].is_string())
    throw ConfigError(context + ": missing string field \"name\"");
  suite.name = j["name"].get<std::string>();
  if (!j.contains("origin") || !j["origin"].is_string())
    throw ConfigError(context + ": missing string field \"origin\"");
  const std::string origin = j["origin"].get<std::string>();
  if (origin == "manual") suite.origin = SuiteOrigin::Manual;
  else if (origin == "generated") suite.origin = SuiteOrigin::Generated;
  else throw ConfigError(context + ": origin must be \"manual\" or \"generated\", got \"" + origin + "\"");
  if (!j.contains("cases") || !j["cases"].is_array())
    throw ConfigError(context + ": missing array field \"cases\"");
  for (const auto& jc : j["cases"]) {
    TestCase t;
    if (!jc.contains("name") || !jc["name"].is_string())
      throw ConfigError(context + ": every case needs a string \"name\"");
    t.name = jc["name"].get<std::string>();
    const std::string case_ctx = context + ", case '" + t.name + "'";
    if (!jc.contains("call") || !jc["call"].is_object() || !jc["call"].contains("function"))
      throw ConfigError(case_ctx + ": missing \"call\" object with \"function\"");
    t.target_function = jc["call"]["function"].get<std::string>();
    if (jc["call"].contains("args")) {
      if (!jc["call"]["args"].is_array()) throw ConfigError(case_ctx + ": \"args\" must be an array");
      for (const auto& ja : jc["call"]["args"]) t.args.push_back(value_from_json(ja, case_ctx));
    }
    if (!jc.contains("expect")) throw ConfigError(case_ctx + ": missing \"expect\"");
    const auto& je = jc["expect"];
    if (je.is_string() && je.get<std::string>() == "runs") {
      t.expected_return.reset();
    } else if (je.is_object() && je.contains("returns")) {
      t.expected_return = value_from_json(je["returns"], case_ctx);
    } else {
      throw ConfigError(case_ctx + ": \"expect\" must be {\"returns\": literal} or \"runs\"");
    }
    suite.cases.push_back(std::move(t));
  }
  return suite;
}

inline nlohmann::ordered_json suite_to_json(const TestSuite& suite) {
  if (suite.origin == SuiteOrigin::Other)
    throw ConfigError("suite '" + suite.name + "': only manual or generated suites can be serialized");
  nlohmann::ordered_json j;
  j["name"] = suite.name;
  j["origin"] = to_string(suite.origin);
  j["cases"] = nlohmann::ordered_json::array();
  for (const TestCase& t : suite.cases) {
    nlohmann::ordered_json jc;
    jc["name"] = t.name;
    jc["call"]["function"] = t.target_function;
    jc["call"]["args"] = nlohmann::ordered_json::array();
    for (const Value& v : t.args) jc["call"]["args"].push_back(value_to_json(v));
    if (t.expected_return) jc["expect"]["returns"] = value_to_json(*t.expected_return);
    else jc["expect"] = "runs";
    j["cases"].push_back(std::move(jc));
  }
  return j;
}

inline TestSuite load_suite(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open suite file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("suite file '" + path + "' is not valid JSON: " + e.what());
  }
  return suite_from_json(j, "suite file '" + path + "'");
}

inline std::string suite_to_string(const TestSuite& suite) {
  return suite_to_json(suite).dump(2) + "\n";
}

inline void save_suite(const TestSuite& suite, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write suite file '" + path + "'");
  out << suite_to_string(suite);
}

}  // namespace sbflbench

#endif  // SBFLBENCH_SUITE_IO_HPP
