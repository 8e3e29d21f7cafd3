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

#include "smelt/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "smelt/catalogue.h"
#include "smelt/detectors.h"
#include "smelt/errors.h"
#include "smelt/profile.h"

namespace smelt {
namespace {

using nlohmann::json;

struct FileError {
  std::string source;
  std::string message;
};

// One input's outcome: a rendered payload or an operational failure.
using FileResult = std::variant<ScanReport, TableProfile, FileError>;

FileResult ProcessFile(const std::filesystem::path& path,
                       const CliInvocation& invocation,
                       const ScanConfig& config) {
  try {
    TypedTable table = ParseTable(ReadCsvFile(path, invocation.parse));
    TableProfile profile = ProfileTable(table, config);
    if (invocation.command == CliInvocation::Command::kProfile) {
      return profile;
    }
    Findings findings = RunAll(profile, config);
    return BuildReport(profile, std::move(findings), config);
  } catch (const Error& e) {
    return FileError{path.filename().string(), e.what()};
  } catch (const std::bad_alloc&) {
    return FileError{path.filename().string(), "out of memory"};
  }
}

json ErrorJson(const FileError& e) {
  return {{"schema", kSchemaVersion},
          {"kind", "error"},
          {"source", e.source},
          {"error", e.message}};
}

char ParseDelimiter(const std::string& text) {
  if (text == "\\t" || text == "tab") return '\t';
  if (text.size() != 1) {
    throw ConfigError("delimiter must be a single character", "delimiter");
  }
  return text[0];
}

int Dispatch(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
  using Command = CliInvocation::Command;
  if (inv.command == Command::kList) {
    if (inv.markdown) {
      out << RenderCatalogueMarkdown();
    } else if (inv.format == OutputFormat::kJson) {
      out << CanonicalJson(CatalogueToJson()) << '\n';
    } else {
      out << RenderCatalogueText();
    }
    return kExitClean;
  }
  if (inv.command == Command::kExplain) {
    const SmellDescriptor& d = Describe(inv.explain_key);
    if (inv.format == OutputFormat::kJson) {
      for (const json& entry : CatalogueToJson()["smells"]) {
        if (entry["key"] == d.key) out << CanonicalJson(entry) << '\n';
      }
    } else {
      out << d.key << ": " << d.name << '\n'
          << "group: " << d.group_name() << " (" << d.group_key() << ")\n"
          << "default severity: " << SeverityName(d.default_severity) << '\n'
          << '\n' << d.description << '\n'
          << '\n' << "Why it matters: " << d.rationale << '\n'
          << '\n' << "Mitigation: " << d.mitigation << '\n';
    }
    return kExitClean;
  }

  const ScanConfig config = LoadConfig(inv.config_path, inv.overrides);
  if (!inv.output) return Scan(inv, config, out, err);
  std::ofstream file(*inv.output, std::ios::binary);
  if (!file) throw IoError("cannot write " + inv.output->string());
  const int status = Scan(inv, config, file, err);
  file.close();
  if (!file) throw IoError("error while writing " + inv.output->string());
  return status;
}

}  // namespace

ScanConfig LoadConfig(std::optional<std::filesystem::path> path,
                      const ConfigOverrides& overrides) {
  if (!path) {
    if (const char* env = std::getenv(kConfigEnvVar); env && *env) {
      path = env;
    }
  }
  ScanConfig config;
  if (path) {
    std::ifstream in(*path, std::ios::binary);
    if (!in) {
      throw ConfigError("cannot read config file " + path->string(), "");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    json doc = json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
      throw ConfigError("config file " + path->string() + " is not valid JSON",
                        "");
    }
    config = MergeConfigJson(config, doc);
  }
  for (const std::string& assignment : overrides.set) {
    ApplyOverride(config, assignment);
  }
  for (const std::string& key : overrides.enable) {
    Describe(key);
    config.enabled[key] = true;
  }
  for (const std::string& key : overrides.disable) {
    Describe(key);
    config.enabled[key] = false;
  }
  config.Validate();
  return config;
}

int Scan(const CliInvocation& invocation, const ScanConfig& config,
         std::ostream& out, std::ostream& err) {
  // Files are independent; results are emitted in argument order.
  std::vector<std::future<FileResult>> pending;
  for (const auto& path : invocation.inputs) {
    pending.push_back(std::async(std::launch::async, ProcessFile, path,
                                 std::cref(invocation), std::cref(config)));
  }
  std::vector<FileResult> results;
  for (auto& f : pending) results.push_back(f.get());

  int status = kExitClean;
  for (const FileResult& r : results) {
    if (const auto* e = std::get_if<FileError>(&r)) {
      err << "smelt: error: " << e->source << ": " << e->message << '\n';
      status = std::max(status, kExitOperationalError);
    } else if (const auto* report = std::get_if<ScanReport>(&r)) {
      status = std::max(status, ExitStatus(*report, invocation.fail_on));
    }
  }

  const bool as_json = invocation.format == OutputFormat::kJson ||
                       invocation.command == CliInvocation::Command::kProfile;
  if (as_json) {
    json docs = json::array();
    for (const FileResult& r : results) {
      if (const auto* e = std::get_if<FileError>(&r)) {
        docs.push_back(ErrorJson(*e));
      } else if (const auto* report = std::get_if<ScanReport>(&r)) {
        docs.push_back(ReportToJson(*report));
      } else {
        docs.push_back(ProfileToJson(std::get<TableProfile>(r)));
      }
    }
    out << CanonicalJson(docs.size() == 1 ? docs[0] : docs) << '\n';
    return status;
  }

  bool first = true;
  for (const FileResult& r : results) {
    if (!first) out << "\n" << std::string(72, '-') << "\n\n";
    first = false;
    if (const auto* e = std::get_if<FileError>(&r)) {
      out << "source: " << e->source << '\n' << "error: " << e->message << '\n';
    } else {
      out << RenderText(std::get<ScanReport>(r), invocation.verbosity);
    }
  }
  return status;
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"smelt: data smell linter for CSV datasets", "smelt"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  CliInvocation inv;
  std::string format = "text";
  std::string delimiter = ",";
  std::vector<std::string> null_tokens;
  std::optional<std::size_t> max_rows;
  std::string fail_on = "warning";
  bool no_header = false;
  bool verbose = false;
  bool quiet = false;
  std::string config_path;
  std::string output_path;

  const auto add_input_options = [&](CLI::App* cmd) {
    cmd->add_option("inputs", inv.inputs, "CSV files")->required();
    cmd->add_option("--config", config_path,
                    "JSON config file (default: $SMELT_CONFIG)");
    cmd->add_option("--max-rows", max_rows, "read at most N data rows")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--delimiter", delimiter, "field delimiter");
    cmd->add_option("--null-token", null_tokens,
                    "token treated as missing; replaces the defaults");
    cmd->add_flag("--no-header", no_header,
                  "first row is data; columns are named col_0..col_{k-1}");
    cmd->add_option("--set", inv.overrides.set, "config override key=value");
    cmd->add_option("--enable", inv.overrides.enable, "enable a smell");
    cmd->add_option("--disable", inv.overrides.disable, "disable a smell");
    cmd->add_option("--output,-o", output_path, "write the report here");
  };

  CLI::App* scan = app.add_subcommand("scan", "detect data smells");
  add_input_options(scan);
  scan->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  scan->add_option("--fail-on", fail_on,
                   "lowest severity that fails the run")
      ->check(CLI::IsMember({"error", "warning", "info", "never"}));
  scan->add_flag("--verbose,-v", verbose, "show confidence and config");
  scan->add_flag("--quiet,-q", quiet, "summary only");

  CLI::App* profile = app.add_subcommand("profile", "dump column profiles");
  add_input_options(profile);

  CLI::App* list = app.add_subcommand("list", "list the smell catalogue");
  list->add_option("--format", format, "text, json or markdown")
      ->check(CLI::IsMember({"text", "json", "markdown"}));

  CLI::App* explain = app.add_subcommand("explain", "describe one smell");
  explain->add_option("key", inv.explain_key, "smell key")->required();
  explain->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitOperationalError;
  }

  try {
    if (scan->parsed()) {
      inv.command = CliInvocation::Command::kScan;
    } else if (profile->parsed()) {
      inv.command = CliInvocation::Command::kProfile;
    } else if (list->parsed()) {
      inv.command = CliInvocation::Command::kList;
    } else {
      inv.command = CliInvocation::Command::kExplain;
    }
    inv.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
    inv.markdown = format == "markdown";
    inv.fail_on = *FailOnFromName(fail_on);
    inv.verbosity = verbose  ? Verbosity::kVerbose
                    : quiet ? Verbosity::kSummary
                            : Verbosity::kNormal;
    if (!config_path.empty()) inv.config_path = config_path;
    if (!output_path.empty()) inv.output = output_path;
    inv.parse.delimiter = ParseDelimiter(delimiter);
    inv.parse.has_header = !no_header;
    inv.parse.max_rows = max_rows;
    if (!null_tokens.empty()) {
      inv.parse.null_tokens = NullTokenSet(null_tokens.begin(),
                                           null_tokens.end());
      inv.parse.null_tokens.insert("");
    }
    inv.parse.Validate();
    return Dispatch(inv, out, err);
  } catch (const Error& e) {
    err << "smelt: error: " << e.what() << '\n';
    return kExitOperationalError;
  }
}

}  // namespace smelt
