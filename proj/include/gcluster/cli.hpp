// Copyright 2026 The gcluster Authors
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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gcluster/error.hpp"
#include "gcluster/graph.hpp"
#include "gcluster/matrix.hpp"
#include "gcluster/synthesis.hpp"
#include "gcluster/tolerances.hpp"

namespace gcluster::cli {

enum class Command { Synthesize, Analyze, Decompose, Verify, Sweep };
enum class OutputFormat { Json, Csv, Text };

struct JobConfig {
  Command command = Command::Synthesize;
  std::optional<std::string> graph_path;
  std::optional<std::string> interaction_path;
  std::string phases = "zero";   // "zero" or a path
  std::string gauge = "identity";  // identity | faithful | custom:PATH
  std::optional<double> z;
  std::optional<std::string> z_range;  // START:STOP:STEP
  std::optional<std::string> out_path;
  std::optional<OutputFormat> format;
  std::optional<double> tol;
  std::uint64_t seed = 42;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitGauge = 3;
inline constexpr int kExitNumerical = 4;
inline constexpr int kExitSearchExhausted = 5;

int exit_code_for(ErrorCode code);

// {"rows": N, "cols": M, "re": [[...]], "im": [[...]]}; "im" is omitted
// when every imaginary part is exactly zero.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
// ParseError on schema violations.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// Accepts a bare matrix object or a bundle holding the matrix under `key`.
ComplexMatrix matrix_from_document(const nlohmann::json& doc, const std::string& key);
// Accepts a bare array of angles or an object with a "theta" array.
graph::PhaseVector phases_from_document(const nlohmann::json& doc);

std::string read_text_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);

// Inclusive START:STOP:STEP, values start + k * step.
std::vector<double> parse_z_range(const std::string& spec);

// Runs one job; output goes to cfg.out_path or `out`, diagnostics to `err`.
int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err);

// Full command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcluster::cli
