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

#ifndef SMELT_REPORT_H_
#define SMELT_REPORT_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "smelt/config.h"
#include "smelt/detectors.h"
#include "smelt/profile.h"

namespace smelt {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kSchemaVersion = "smelt/1";

// Finding counts per catalogue key, and per group.
struct ReportSummary {
  std::array<std::size_t, 14> per_key{};  // catalogue order
  std::array<std::size_t, 5> per_group{};
  std::size_t total = 0;
};

ReportSummary Summarize(std::span<const Finding> findings);

struct ScanReport {
  std::string tool_version{kToolVersion};
  std::string source_name;
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::vector<std::string> parse_warnings;
  ReportSummary summary;
  Findings findings;
  ScanConfig config;
};

ScanReport BuildReport(const TableProfile& profile, Findings findings,
                       const ScanConfig& config);

enum class Verbosity {
  kSummary,  // header and summary only
  kNormal,   // plus one block per finding
  kVerbose,  // plus confidence and the effective config
};

std::string RenderText(const ScanReport& report,
                       Verbosity verbosity = Verbosity::kNormal);

nlohmann::json ReportToJson(const ScanReport& report);

// Canonical JSON text: object keys sorted byte-wise, no whitespace,
// non-integral numbers with 12 significant digits (see FormatJsonDouble).
std::string CanonicalJson(const nlohmann::json& value);

// 12 significant digits, trailing zeros kept: 1.0 -> "1.00000000000",
// 0.5 -> "0.500000000000". Magnitudes outside [1e-6, 1e15) use exponent
// notation ("1.00000000000e-07"). Non-finite values render as null.
std::string FormatJsonDouble(double value);

std::string RenderJson(const ScanReport& report);

// Threshold for a non-zero exit: findings at or above it fail the run.
enum class FailOn { kError, kWarning, kInfo, kNever };

std::optional<FailOn> FailOnFromName(std::string_view name);

inline constexpr int kExitClean = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitOperationalError = 2;

int ExitStatus(const ScanReport& report, FailOn fail_on);

}  // namespace smelt

#endif  // SMELT_REPORT_H_
