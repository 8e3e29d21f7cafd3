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

#ifndef SMELT_FINDING_H_
#define SMELT_FINDING_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace smelt {

// Declaration order is the catalogue order.
enum class Group { kRed, kCat, kMisc, kMiss, kStr };

std::string_view GroupKey(Group group);   // "red", "cat", ...
std::string_view GroupName(Group group);  // "Redundant value smells", ...
std::optional<Group> GroupFromKey(std::string_view key);

inline constexpr Group kAllGroups[] = {Group::kRed, Group::kCat, Group::kMisc,
                                       Group::kMiss, Group::kStr};

// Ordered so that a larger value is more severe.
enum class Severity { kInfo = 0, kWarning = 1, kError = 2 };

std::string_view SeverityName(Severity severity);
std::optional<Severity> SeverityFromName(std::string_view name);

enum class Confidence { kLow, kMedium, kHigh };

std::string_view ConfidenceName(Confidence confidence);

struct Finding {
  std::string smell_key;
  Group group = Group::kRed;
  // Empty for table-level findings.
  std::vector<std::string> columns;
  // Parallel to `columns`; used for ordering.
  std::vector<std::size_t> column_indices;
  Severity severity = Severity::kWarning;
  Confidence confidence = Confidence::kMedium;
  // Metric name -> value. Always a JSON object.
  nlohmann::json evidence = nlohmann::json::object();
  std::string suggestion;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

}  // namespace smelt

#endif  // SMELT_FINDING_H_
