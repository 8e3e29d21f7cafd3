/* Copyright 2026 The Smelt Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Command-line front end: ingest -> profile -> detect -> report for each
// input file.

#ifndef SMELT_CLI_H_
#define SMELT_CLI_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "smelt/config.h"
#include "smelt/ingest.h"
#include "smelt/report.h"

namespace smelt {

// Command-line layer of the config precedence chain.
struct ConfigOverrides {
  std::vector<std::string> set;      // key=value
  std::vector<std::string> enable;   // smell keys
  std::vector<std::string> disable;  // smell keys
};

// Environment variable consulted when no --config is given.
inline constexpr const char* kConfigEnvVar = "SMELT_CONFIG";

// defaults < config file < overrides. `path` falls back to $SMELT_CONFIG.
// Throws ConfigError on an unreadable/invalid file, unknown field or unknown
// smell key.
ScanConfig LoadConfig(std::optional<std::filesystem::path> path,
                      const ConfigOverrides& overrides);

enum class OutputFormat { kText, kJson };

struct CliInvocation {
  enum class Command { kScan, kProfile, kList, kExplain };

  Command command = Command::kScan;
  std::vector<std::filesystem::path> inputs;
  OutputFormat format = OutputFormat::kText;
  bool markdown = false;  // list only
  std::optional<std::filesystem::path> config_path;
  ConfigOverrides overrides;
  ParseOptions parse;
  FailOn fail_on = FailOn::kWarning;
  std::optional<std::filesystem::path> output;
  Verbosity verbosity = Verbosity::kNormal;
  std::string explain_key;
};

// Runs scan over every input, writes the rendered reports to `out`, per-file
// errors to `err`; returns the highest per-file status.
int Scan(const CliInvocation& invocation, const ScanConfig& config,
         std::ostream& out, std::ostream& err);

// Full entry point: argument parsing, config loading and dispatch.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace smelt

#endif  // SMELT_CLI_H_
