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

#ifndef SBFLBENCH_SBFLBENCH_HPP
#define SBFLBENCH_SBFLBENCH_HPP

#include "sbflbench/analysis.hpp"
#include "sbflbench/ast.hpp"
#include "sbflbench/check.hpp"
#include "sbflbench/csv.hpp"
#include "sbflbench/diagnostics.hpp"
#include "sbflbench/interp.hpp"
#include "sbflbench/lexer.hpp"
#include "sbflbench/minilang.hpp"
#include "sbflbench/mutation.hpp"
#include "sbflbench/parallel.hpp"
#include "sbflbench/parser.hpp"
#include "sbflbench/pipeline.hpp"
#include "sbflbench/printer.hpp"
#include "sbflbench/report.hpp"
#include "sbflbench/sbfl.hpp"
#include "sbflbench/stats.hpp"
#include "sbflbench/suite_io.hpp"
#include "sbflbench/suitegen.hpp"

#endif  // SBFLBENCH_SBFLBENCH_HPP
