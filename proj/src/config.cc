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

#include "smelt/config.h"

#include <functional>
#include <regex>

#include "smelt/catalogue.h"
#include "smelt/errors.h"
#include "smelt/text.h"

namespace smelt {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& field, const std::string& problem) {
  throw ConfigError("config field '" + field + "': " + problem, field);
}

double ReadFraction(const std::string& field, const json& v) {
  if (!v.is_number()) Fail(field, "expected a number");
  return v.get<double>();
}

std::size_t ReadCount(const std::string& field, const json& v) {
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer()) Fail(field, "expected a positive integer");
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0 && d == static_cast<double>(static_cast<std::size_t>(d))) {
      return static_cast<std::size_t>(d);
    }
  }
  Fail(field, "expected a positive integer");
}

std::string ReadString(const std::string& field, const json& v) {
  if (!v.is_string()) Fail(field, "expected a string");
  return v.get<std::string>();
}

std::set<std::string> ReadLexicon(const std::string& field, const json& v) {
  std::set<std::string> out;
  if (v.is_string()) {
    // Comma-separated form, used by --set.
    const std::string s = v.get<std::string>();
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t comma = s.find(',', start);
      if (comma == std::string::npos) comma = s.size();
      const std::string_view item =
          Trim(std::string_view(s).substr(start, comma - start));
      if (!item.empty()) out.insert(CaseFold(item));
      start = comma + 1;
    }
    return out;
  }
  if (!v.is_array()) Fail(field, "expected an array of strings");
  for (const json& item : v) {
    if (!item.is_string()) Fail(field, "expected an array of strings");
    out.insert(CaseFold(item.get<std::string>()));
  }
  return out;
}

struct FieldSpec {
  std::string name;
  std::function<json(const ScanConfig&)> get;
  std::function<void(ScanConfig&, const json&)> set;
};

#define SMELT_FRACTION_FIELD(f)                                              \
  FieldSpec {                                                                \
    #f, [](const ScanConfig& c) { return json(c.f); },                       \
        [](ScanConfig& c, const json& v) { c.f = ReadFraction(#f, v); }      \
  }
#define SMELT_COUNT_FIELD(f)                                                 \
  FieldSpec {                                                                \
    #f, [](const ScanConfig& c) { return json(c.f); },                       \
        [](ScanConfig& c, const json& v) { c.f = ReadCount(#f, v); }         \
  }
#define SMELT_STRING_FIELD(f)                                                \
  FieldSpec {                                                                \
    #f, [](const ScanConfig& c) { return json(c.f); },                       \
        [](ScanConfig& c, const json& v) { c.f = ReadString(#f, v); }        \
  }
#define SMELT_LEXICON_FIELD(f)                                               \
  FieldSpec {                                                                \
    #f, [](const ScanConfig& c) { return json(c.f); },                       \
        [](ScanConfig& c, const json& v) { c.f = ReadLexicon(#f, v); }       \
  }

const std::vector<FieldSpec>& Fields() {
  static const std::vector<FieldSpec> fields = {
      SMELT_LEXICON_FIELD(positive_response_lexicon),
      SMELT_FRACTION_FIELD(binary_missing_fraction),
      SMELT_COUNT_FIELD(corr_min_pairs),
      SMELT_FRACTION_FIELD(corr_threshold),
      FieldSpec{"enabled",
                [](const ScanConfig& c) { return json(c.enabled); },
                [](ScanConfig& c, const json& v) {
                  if (!v.is_object()) Fail("enabled", "expected an object");
                  for (const auto& [key, flag] : v.items()) {
                    if (!IsKnownSmell(key)) {
                      Fail("enabled", "unknown smell key '" + key + "'");
                    }
                    if (!flag.is_boolean()) {
                      Fail("enabled", "expected a boolean for '" + key + "'");
                    }
                    c.enabled[key] = flag.get<bool>();
                  }
                }},
      SMELT_COUNT_FIELD(high_cardinality_threshold),
      SMELT_FRACTION_FIELD(imbalance_ratio),
      SMELT_FRACTION_FIELD(missing_fraction_threshold),
      SMELT_LEXICON_FIELD(quantity_lexicon),
      SMELT_LEXICON_FIELD(sensitive_lexicon),
      SMELT_FRACTION_FIELD(sentinel_min_fraction),
      SMELT_STRING_FIELD(sentinel_number_pattern),
      SMELT_LEXICON_FIELD(sentinel_string_lexicon),
      FieldSpec{"severity_overrides",
                [](const ScanConfig& c) {
                  json out = json::object();
                  for (const auto& [key, sev] : c.severity_overrides) {
                    out[key] = SeverityName(sev);
                  }
                  return out;
                },
                [](ScanConfig& c, const json& v) {
                  if (!v.is_object()) {
                    Fail("severity_overrides", "expected an object");
                  }
                  for (const auto& [key, sev] : v.items()) {
                    if (!IsKnownSmell(key)) {
                      Fail("severity_overrides",
                           "unknown smell key '" + key + "'");
                    }
                    const auto parsed = sev.is_string()
                                            ? SeverityFromName(
                                                  sev.get<std::string>())
                                            : std::nullopt;
                    if (!parsed) {
                      Fail("severity_overrides",
                           "expected error|warning|info for '" + key + "'");
                    }
                    c.severity_overrides[key] = *parsed;
                  }
                }},
      SMELT_FRACTION_FIELD(str_pattern_fraction),
      SMELT_STRING_FIELD(target_name_pattern),
      SMELT_COUNT_FIELD(top_k),
      SMELT_COUNT_FIELD(uid_min_rows),
      SMELT_STRING_FIELD(uid_name_pattern),
      SMELT_LEXICON_FIELD(unit_token_lexicon),
  };
  return fields;
}

#undef SMELT_FRACTION_FIELD
#undef SMELT_COUNT_FIELD
#undef SMELT_STRING_FIELD
#undef SMELT_LEXICON_FIELD

const FieldSpec* FindField(std::string_view name) {
  for (const FieldSpec& f : Fields()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

void CheckFraction(const char* field, double v) {
  if (!(v >= 0.0 && v <= 1.0)) Fail(field, "must lie in [0, 1]");
}

void CheckPositiveFraction(const char* field, double v) {
  if (!(v > 0.0 && v <= 1.0)) Fail(field, "must lie in (0, 1]");
}

void CheckRegex(const char* field, const std::string& pattern) {
  try {
    std::regex re(pattern, std::regex::ECMAScript);
  } catch (const std::regex_error& e) {
    Fail(field, std::string("invalid regular expression: ") + e.what());
  }
}

}  // namespace

bool ScanConfig::IsEnabled(std::string_view key) const {
  const auto it = enabled.find(std::string(key));
  return it == enabled.end() || it->second;
}

void ScanConfig::Validate() const {
  CheckPositiveFraction("corr_threshold", corr_threshold);
  CheckPositiveFraction("imbalance_ratio", imbalance_ratio);
  CheckPositiveFraction("missing_fraction_threshold",
                        missing_fraction_threshold);
  CheckPositiveFraction("binary_missing_fraction", binary_missing_fraction);
  CheckFraction("sentinel_min_fraction", sentinel_min_fraction);
  CheckPositiveFraction("str_pattern_fraction", str_pattern_fraction);
  if (corr_min_pairs < 2) Fail("corr_min_pairs", "must be at least 2");
  if (uid_min_rows == 0) Fail("uid_min_rows", "must be positive");
  if (high_cardinality_threshold == 0) {
    Fail("high_cardinality_threshold", "must be positive");
  }
  // misc-balance reads class histograms of up to 10 classes from top values.
  if (top_k < 10) Fail("top_k", "must be at least 10");
  CheckRegex("uid_name_pattern", uid_name_pattern);
  CheckRegex("target_name_pattern", target_name_pattern);
  CheckRegex("sentinel_number_pattern", sentinel_number_pattern);
  const std::pair<const char*, const std::set<std::string>*> lexicons[] = {
      {"positive_response_lexicon", &positive_response_lexicon},
      {"sentinel_string_lexicon", &sentinel_string_lexicon},
      {"sensitive_lexicon", &sensitive_lexicon},
      {"quantity_lexicon", &quantity_lexicon},
      {"unit_token_lexicon", &unit_token_lexicon},
  };
  for (const auto& [name, lexicon] : lexicons) {
    if (lexicon->empty()) Fail(name, "lexicon must not be empty");
  }
  for (const auto& [key, flag] : enabled) {
    if (!IsKnownSmell(key)) Fail("enabled", "unknown smell key '" + key + "'");
  }
  for (const auto& [key, sev] : severity_overrides) {
    if (!IsKnownSmell(key)) {
      Fail("severity_overrides", "unknown smell key '" + key + "'");
    }
  }
}

nlohmann::json ConfigToJson(const ScanConfig& config) {
  json out = json::object();
  for (const FieldSpec& f : Fields()) out[f.name] = f.get(config);
  return out;
}

ScanConfig MergeConfigJson(ScanConfig base, const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("config document must be a JSON object", "");
  }
  for (const auto& [key, value] : doc.items()) {
    const FieldSpec* field = FindField(key);
    if (field == nullptr) Fail(key, "unknown field");
    field->set(base, value);
  }
  base.Validate();
  return base;
}

void ApplyOverride(ScanConfig& config, std::string_view assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("override '" + std::string(assignment) +
                          "' is not of the form key=value",
                      "");
  }
  const std::string key(Trim(assignment.substr(0, eq)));
  const std::string text(assignment.substr(eq + 1));
  const FieldSpec* field = FindField(key);
  if (field == nullptr) Fail(key, "unknown field");
  json value = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) value = text;
  field->set(config, value);
  config.Validate();
}

const std::vector<std::string>& ConfigFieldNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const FieldSpec& f : Fields()) out.push_back(f.name);
    return out;
  }();
  return names;
}

}  // namespace smelt
