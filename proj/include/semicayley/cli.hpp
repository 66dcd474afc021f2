// Copyright 2026 The semicayley Authors
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

#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "semicayley/json_io.hpp"

namespace semicayley {

struct JobConfig {
  /// Graph source: explicit spec, {"family": ...} or {"cayley": ...}.
  Json graph;
  /// spectrum | evolve | pst-check | pst-find | period
  std::string command;
  double tol = 1e-8;
  std::optional<std::string> time;
  /// json | text
  std::string format = "json";
  std::optional<std::string> from;
  std::optional<std::string> to;
};

/// Reads a job file: {"command", "tol", "time", "format", "from", "to"} plus
/// either {"graph": {...}} or the graph fields inline.
JobConfig job_from_json(const Json& j);

/// Runs one job and writes its report. Returns the process exit code: 0 on
/// success, 1 on validation errors, 2 when computation paths disagree.
/// Errors are reported as {"error": {"kind", "message"}}.
int run(const JobConfig& config, std::ostream& out);

}  // namespace semicayley
