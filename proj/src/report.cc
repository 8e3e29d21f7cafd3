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

#include "smelt/report.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "smelt/catalogue.h"

namespace smelt {
namespace {

using nlohmann::json;

std::string DumpString(const std::string& s) {
  return json(s).dump(-1, ' ', false, json::error_handler_t::replace);
}

void WriteCanonical(const json& value, std::string& out) {
  switch (value.type()) {
    case json::value_t::object: {
      out.push_back('{');
      bool first = true;
      // object_t is an ordered std::map, so iteration is byte-wise sorted.
      for (const auto& [key, member] : value.items()) {
        if (!first) out.push_back(',');
        first = false;
        out += DumpString(key);
        out.push_back(':');
        WriteCanonical(member, out);
      }
      out.push_back('}');
      break;
    }
    case json::value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const json& element : value) {
        if (!first) out.push_back(',');
        first = false;
        WriteCanonical(element, out);
      }
      out.push_back(']');
      break;
    }
    case json::value_t::string:
      out += DumpString(value.get_ref<const std::string&>());
      break;
    case json::value_t::number_float:
      out += FormatJsonDouble(value.get<double>());
      break;
    default:
      out += value.dump();
      break;
  }
}

std::string TextValue(const json& v) {
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return CanonicalJson(v);
}

}  // namespace

ReportSummary Summarize(std::span<const Finding> findings) {
  ReportSummary summary;
  for (const Finding& f : findings) {
    ++summary.per_key[CatalogueRank(f.smell_key)];
    ++summary.per_group[static_cast<std::size_t>(f.group)];
    ++summary.total;
  }
  return summary;
}

ScanReport BuildReport(const TableProfile& profile, Findings findings,
                       const ScanConfig& config) {
  ScanReport report;
  report.source_name = profile.source_name;
  report.rows = profile.row_count;
  report.columns = profile.column_count;
  report.parse_warnings = profile.parse_warnings;
  report.summary = Summarize(findings);
  report.findings = std::move(findings);
  report.config = config;
  return report;
}

std::string FormatJsonDouble(double value) {
  if (!std::isfinite(value)) return "null";
  value += 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.11e", value);
  const char* e = std::strchr(buf, 'e');
  const int exponent = std::atoi(e + 1);
  if (value == 0.0 || (exponent >= -6 && exponent <= 11)) {
    const int decimals = value == 0.0 ? 11 : 11 - exponent;
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  }
  return buf;
}

std::string CanonicalJson(const nlohmann::json& value) {
  std::string out;
  WriteCanonical(value, out);
  return out;
}

nlohmann::json ReportToJson(const ScanReport& report) {
  json groups = json::object();
  for (Group g : kAllGroups) {
    groups[std::string(GroupKey(g))] = {
        {"name", GroupName(g)},
        {"count", report.summary.per_group[static_cast<std::size_t>(g)]},
        {"keys", json::object()},
    };
  }
  const auto smells = ListSmells();
  for (std::size_t i = 0; i < smells.size(); ++i) {
    groups[std::string(smells[i].group_key())]["keys"]
          [std::string(smells[i].key)] = report.summary.per_key[i];
  }
  json findings = json::array();
  for (const Finding& f : report.findings) {
    findings.push_back({
        {"smell_key", f.smell_key},
        {"name", Describe(f.smell_key).name},
        {"group", GroupKey(f.group)},
        {"columns", f.columns},
        {"severity", SeverityName(f.severity)},
        {"confidence", ConfidenceName(f.confidence)},
        {"evidence", f.evidence},
        {"suggestion", f.suggestion},
        {"message", f.message},
    });
  }
  return {
      {"schema", kSchemaVersion},
      {"kind", "scan"},
      {"tool_version", report.tool_version},
      {"source", report.source_name},
      {"rows", report.rows},
      {"columns", report.columns},
      {"parse_warnings", report.parse_warnings},
      {"summary", {{"total", report.summary.total}, {"groups", groups}}},
      {"findings", std::move(findings)},
      {"config", ConfigToJson(report.config)},
  };
}

std::string RenderJson(const ScanReport& report) {
  return CanonicalJson(ReportToJson(report));
}

std::string RenderText(const ScanReport& report, Verbosity verbosity) {
  std::ostringstream out;
  out << "smelt " << report.tool_version << '\n'
      << "source: " << report.source_name << '\n'
      << "rows: " << report.rows << ", columns: " << report.columns << '\n';
  for (const std::string& w : report.parse_warnings) {
    out << "parse warning: " << w << '\n';
  }

  out << "\nsummary\n";
  const auto smells = ListSmells();
  for (Group g : kAllGroups) {
    out << "  " << GroupName(g) << "  "
        << report.summary.per_group[static_cast<std::size_t>(g)] << '\n';
    for (std::size_t i = 0; i < smells.size(); ++i) {
      if (smells[i].group != g) continue;
      out << "    " << smells[i].key << "  " << report.summary.per_key[i]
          << '\n';
    }
  }
  out << "  total  " << report.summary.total << '\n';

  if (report.findings.empty()) {
    out << "\nno data smells detected\n";
  } else if (verbosity != Verbosity::kSummary) {
    out << "\nfindings\n";
    for (const Finding& f : report.findings) {
      out << "\n[" << SeverityName(f.severity) << "] " << f.smell_key;
      if (!f.columns.empty()) {
        out << " (";
        for (std::size_t i = 0; i < f.columns.size(); ++i) {
          out << (i ? ", " : "") << f.columns[i];
        }
        out << ')';
      }
      out << '\n' << "  " << f.message << '\n';
      if (verbosity == Verbosity::kVerbose) {
        out << "  confidence: " << ConfidenceName(f.confidence) << '\n';
      }
      out << "  evidence:";
      for (const auto& [key, value] : f.evidence.items()) {
        out << ' ' << key << '=' << TextValue(value);
      }
      out << '\n' << "  suggestion: " << f.suggestion << '\n';
    }
  }
  if (verbosity == Verbosity::kVerbose) {
    out << "\nconfig: " << CanonicalJson(ConfigToJson(report.config)) << '\n';
  }
  return out.str();
}

std::optional<FailOn> FailOnFromName(std::string_view name) {
  if (name == "error") return FailOn::kError;
  if (name == "warning") return FailOn::kWarning;
  if (name == "info") return FailOn::kInfo;
  if (name == "never") return FailOn::kNever;
  return std::nullopt;
}

int ExitStatus(const ScanReport& report, FailOn fail_on) {
  if (fail_on == FailOn::kNever) return kExitClean;
  const Severity bar = fail_on == FailOn::kError     ? Severity::kError
                       : fail_on == FailOn::kWarning ? Severity::kWarning
                                                     : Severity::kInfo;
  for (const Finding& f : report.findings) {
    if (f.severity >= bar) return kExitFindings;
  }
  return kExitClean;
}

}  // namespace smelt
