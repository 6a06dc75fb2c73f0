// Copyright 2026 The goppa-orbits Authors.
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

// The goppa-orbits command surface. Each subcommand produces a JSON report
// and a text rendering of it; `--json` selects which one is printed.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace goppa::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitInfeasible = 3,
};

struct RunConfig {
  std::string command;
  unsigned n = 5;
  bool json = false;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::optional<std::string> modulus_base;
  std::optional<std::string> modulus_big;

  std::vector<unsigned long long> d;
  bool closed_form_only = false;
  std::string alpha = "random";
  std::string map = "random";
  std::vector<std::string> which;
  bool no_sweep = false;
  bool extended = false;
  bool table = false;
  unsigned table_from = 5;
  unsigned table_to = 61;
};

struct CommandResult {
  nlohmann::ordered_json report;
  std::string text;
  int exit_code = kExitOk;
};

/// Worker default: $GOPPA_ORBITS_THREADS if set to a positive integer, else
/// the hardware concurrency.
unsigned default_workers();

/// Runs one configured command. Library errors propagate as exceptions.
CommandResult execute(const RunConfig& config);

/// Full entry point: parses argv, runs, prints, and maps errors to exit
/// codes with a one-line reason on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace goppa::cli
