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

#ifndef SMELT_CONFIG_H_
#define SMELT_CONFIG_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "smelt/finding.h"

namespace smelt {

// Every detector threshold and lexicon. The defaults are the reference
// behaviour pinned by the fixture corpus.
//
// Regex fields use ECMAScript syntax. Name patterns are matched against the
// normalized column name (lower-case tokens joined by single spaces, see
// NormalizeName), so "hostId" and "host_id" are both seen as "host id".
struct ScanConfig {
  double corr_threshold = 0.8;
  std::size_t corr_min_pairs = 30;
  std::size_t uid_min_rows = 10;
  std::string uid_name_pattern = "(^| )(id|uid|key|index)( |$)";
  std::size_t high_cardinality_threshold = 20;
  double imbalance_ratio = 0.10;
  std::string target_name_pattern =
      "(^| )(class|label|target|outcome|churn)( |$)";
  double missing_fraction_threshold = 0.25;
  double binary_missing_fraction = 0.50;
  std::set<std::string> positive_response_lexicon = {"y", "yes", "t", "true",
                                                     "1"};
  std::set<std::string> sentinel_string_lexicon = {
      "?",    "-",       "--",      ".",       "null",     "nil", "none",
      "n/a",  "na",      "unknown", "missing", "undefined"};
  // Matched against the integer rendering of a numeric value.
  std::string sentinel_number_pattern = "^[+-]?(9{3,}|6{3,})$";
  double sentinel_min_fraction = 0.01;
  std::set<std::string> sensitive_lexicon = {
      "sex",         "gender",         "race",        "ethnicity",
      "religion",    "nationality",    "native country",
      "age",         "disability",     "marital status",
      "pregnancy",   "sexual orientation"};
  std::set<std::string> quantity_lexicon = {
      "radius", "perimeter", "area",        "length", "width", "height",
      "weight", "mass",      "duration",    "distance", "depth", "volume",
      "temperature", "price", "salary", "income", "speed"};
  std::set<std::string> unit_token_lexicon = {
      "mm", "cm",  "m",  "km", "in",  "ft",  "g",   "kg",  "lb",
      "s",  "sec", "min", "h", "hr",  "ms",  "usd", "eur", "gbp",
      "$",  "%",   "\xC2\xB0" "c", "\xC2\xB0" "f", "k"};
  double str_pattern_fraction = 0.95;
  // Number of most frequent values kept per column.
  std::size_t top_k = 20;
  // Smell key -> enabled. Keys not listed are enabled.
  std::map<std::string, bool> enabled;
  // Smell key -> severity that replaces the detector's choice.
  std::map<std::string, Severity> severity_overrides;

  bool IsEnabled(std::string_view key) const;

  // Throws ConfigError naming the first invalid field.
  void Validate() const;
};

// Canonical JSON form, field names as in the struct.
nlohmann::json ConfigToJson(const ScanConfig& config);

// Applies every field present in `doc` on top of `base`. Unknown fields and
// type mismatches throw ConfigError naming the field. The result is
// validated.
ScanConfig MergeConfigJson(ScanConfig base, const nlohmann::json& doc);

// Applies one `key=value` override. `value` is read as JSON when it parses,
// otherwise as a plain string; lexicon fields also accept a comma-separated
// list.
void ApplyOverride(ScanConfig& config, std::string_view assignment);

// Field names accepted by MergeConfigJson / ApplyOverride.
const std::vector<std::string>& ConfigFieldNames();

}  // namespace smelt

#endif  // SMELT_CONFIG_H_
