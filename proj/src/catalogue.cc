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

#include "smelt/catalogue.h"

#include <array>
#include <sstream>

#include "smelt/errors.h"

namespace smelt {
namespace {

constexpr std::array<SmellDescriptor, 14> kSmells = {{
    // Redundant value smells.
    {"red-corr", "Correlated features", Group::kRed,
     "Two numerical features are strongly linearly related. One of them "
     "carries little information that the other does not already provide.",
     "Redundant features inflate the dataset, slow down training and every "
     "later stage that stores or versions the data.",
     "Run feature selection and consider dropping one feature of the pair.",
     Severity::kWarning, Confidence::kHigh},
    {"red-uid", "Unique identifiers", Group::kRed,
     "A column holds a distinct value for every row, typically a primary "
     "key exported from a database.",
     "A model can memorise identifiers instead of learning general trends, "
     "and identifiers hide duplicate examples from row comparison.",
     "Exclude the identifier from training. Keep it for joins, and inspect "
     "repeated ids for engineered features or duplicates.",
     Severity::kWarning, Confidence::kHigh},
    {"red-dup", "Duplicate examples", Group::kRed,
     "Two or more rows describe the same entity with identical values.",
     "Duplicates bloat the data and a model trained on them sees the same "
     "example several times, which encourages overfitting.",
     "Deduplicate the rows before training. Repeated rows can be legitimate "
     "in event or time-series data; confirm before dropping them.",
     Severity::kWarning, Confidence::kHigh},
    // Categorical value smells.
    {"cat-hierarchy", "Hierarchy from label encoding", Group::kCat,
     "A sensitive categorical feature with no natural order among its "
     "values is at risk of being label encoded.",
     "Integer codes impose an order that the model may read as a ranking "
     "of the groups, which biases predictions.",
     "Use one-hot encoding for unordered sensitive categories instead of "
     "label encoding.",
     Severity::kWarning, Confidence::kMedium},
    {"cat-bin", "Binning categorical features", Group::kCat,
     "A categorical feature has many distinct values, many of them rare.",
     "One-hot encoding a high-cardinality feature produces a very wide "
     "feature space that costs memory, storage and compute.",
     "Bin rare values into broader groups (for example countries into "
     "continents) or use an existing coarser column.",
     Severity::kInfo, Confidence::kMedium},
    // Miscellaneous smells.
    {"misc-unit", "Unknown unit of measure", Group::kMisc,
     "A numerical measurement has no documented unit in its name.",
     "Without a known unit, observations recorded in different units cannot "
     "be detected, and scaling or outlier checks become meaningless.",
     "Document the unit in the column header or in the dataset "
     "documentation.",
     Severity::kInfo, Confidence::kLow},
    {"misc-balance", "Imbalanced examples", Group::kMisc,
     "A class-like column has a class that is far rarer than a uniform "
     "split would give.",
     "Models trained on skewed targets under-perform on the rare class and "
     "accuracy hides the problem.",
     "Evaluate with precision and recall, collect more data for the rare "
     "class, or resample the training set.",
     Severity::kInfo, Confidence::kMedium},
    {"misc-sensitive", "Presence of sensitive features", Group::kMisc,
     "The dataset contains a protected attribute such as sex, race or age.",
     "Historical patterns tied to protected attributes lead to unfair and "
     "biased predictions when the model is used for decisions.",
     "Exclude the feature from training or apply fairness-aware "
     "regularisation.",
     Severity::kWarning, Confidence::kMedium},
    // Missing value smells.
    {"miss-null", "Missing values", Group::kMiss,
     "A large share of a column is missing.",
     "Missing cells are silently skipped by statistics and dropping them "
     "can starve under-represented groups of examples.",
     "Impute the missing values, from mean or median up to model-based "
     "imputation.",
     Severity::kWarning, Confidence::kHigh},
    {"miss-sp-val", "Special missing values", Group::kMiss,
     "Missing values are encoded as a special token such as '?' or as an "
     "implausible number such as -9999.",
     "Tools do not recognise these encodings as missing. A numeric dummy "
     "value flows into statistics without any error.",
     "Replace the special value with a real null, or document the encoding.",
     Severity::kError, Confidence::kMedium},
    {"miss-bin", "Binary missing values", Group::kMiss,
     "A mostly empty column whose present values are all a positive "
     "response such as 'Y'.",
     "The gaps likely mean 'no' rather than unknown; dropping or imputing "
     "them destroys that information.",
     "Fill the missing cells with the negative response instead of dropping "
     "the rows.",
     Severity::kWarning, Confidence::kMedium},
    // String value smells.
    {"str-num", "Numerical feature as string", Group::kStr,
     "A string column holds numerical information, such as version numbers "
     "or numbers with separators or units.",
     "The numbers cannot be used as features until they are extracted.",
     "Extract numerical features, for example split a version into major, "
     "minor and patch.",
     Severity::kWarning, Confidence::kMedium},
    {"str-sanitise", "Strings with special characters", Group::kStr,
     "String values carry leading or trailing whitespace or differ only by "
     "case.",
     "Variants of one value are counted as distinct categories by analysis "
     "tools.",
     "Trim whitespace and normalise case before analysis.",
     Severity::kWarning, Confidence::kHigh},
    {"str-human", "Strings in human-friendly formats", Group::kStr,
     "Numbers are written for people, with unit words that change between "
     "rows, such as '90 min' and '2 Seasons'.",
     "The values are not comparable without converting them to one unit.",
     "Convert to a single numerical unit; the conversion may need domain "
     "knowledge.",
     Severity::kWarning, Confidence::kMedium},
}};

std::string ValidKeysList() {
  std::string out;
  for (const SmellDescriptor& d : kSmells) {
    if (!out.empty()) out += ", ";
    out += d.key;
  }
  return out;
}

}  // namespace

std::string_view GroupKey(Group group) {
  switch (group) {
    case Group::kRed:
      return "red";
    case Group::kCat:
      return "cat";
    case Group::kMisc:
      return "misc";
    case Group::kMiss:
      return "miss";
    case Group::kStr:
      return "str";
  }
  return "red";
}

std::string_view GroupName(Group group) {
  switch (group) {
    case Group::kRed:
      return "Redundant value smells";
    case Group::kCat:
      return "Categorical value smells";
    case Group::kMisc:
      return "Miscellaneous value smells";
    case Group::kMiss:
      return "Missing value smells";
    case Group::kStr:
      return "String value smells";
  }
  return "";
}

std::optional<Group> GroupFromKey(std::string_view key) {
  for (Group g : kAllGroups) {
    if (GroupKey(g) == key) return g;
  }
  return std::nullopt;
}

std::string_view SeverityName(Severity severity) {
  switch (severity) {
    case Severity::kInfo:
      return "info";
    case Severity::kWarning:
      return "warning";
    case Severity::kError:
      return "error";
  }
  return "info";
}

std::optional<Severity> SeverityFromName(std::string_view name) {
  if (name == "info") return Severity::kInfo;
  if (name == "warning") return Severity::kWarning;
  if (name == "error") return Severity::kError;
  return std::nullopt;
}

std::string_view ConfidenceName(Confidence confidence) {
  switch (confidence) {
    case Confidence::kLow:
      return "low";
    case Confidence::kMedium:
      return "medium";
    case Confidence::kHigh:
      return "high";
  }
  return "low";
}

std::span<const SmellDescriptor> ListSmells() { return kSmells; }

bool IsKnownSmell(std::string_view key) {
  for (const SmellDescriptor& d : kSmells) {
    if (d.key == key) return true;
  }
  return false;
}

const SmellDescriptor& Describe(std::string_view key) {
  for (const SmellDescriptor& d : kSmells) {
    if (d.key == key) return d;
  }
  throw UnknownSmellError("unknown smell '" + std::string(key) +
                          "'; valid keys: " + ValidKeysList());
}

std::size_t CatalogueRank(std::string_view key) {
  for (std::size_t i = 0; i < kSmells.size(); ++i) {
    if (kSmells[i].key == key) return i;
  }
  return kSmells.size();
}

nlohmann::json CatalogueToJson() {
  nlohmann::json smells = nlohmann::json::array();
  for (const SmellDescriptor& d : kSmells) {
    smells.push_back({
        {"key", d.key},
        {"name", d.name},
        {"group", d.group_key()},
        {"group_name", d.group_name()},
        {"description", d.description},
        {"rationale", d.rationale},
        {"mitigation", d.mitigation},
        {"default_severity", SeverityName(d.default_severity)},
        {"default_confidence", ConfidenceName(d.default_confidence)},
    });
  }
  return {{"schema", "smelt/1"}, {"smells", std::move(smells)}};
}

std::string RenderCatalogueText() {
  std::ostringstream out;
  std::optional<Group> current;
  for (const SmellDescriptor& d : kSmells) {
    if (current != d.group) {
      if (current) out << '\n';
      out << d.group_name() << " (" << d.group_key() << ")\n";
      current = d.group;
    }
    out << "  " << d.key;
    for (std::size_t pad = d.key.size(); pad < 16; ++pad) out << ' ';
    out << d.name << '\n';
  }
  return out.str();
}

std::string RenderCatalogueMarkdown() {
  std::ostringstream out;
  out << "# Data smell catalogue\n\n"
      << "Generated by `smelt list --format markdown`. Do not edit by "
         "hand.\n\n"
      << "| Key | Name | Group |\n"
      << "|-----|------|-------|\n";
  for (const SmellDescriptor& d : kSmells) {
    out << "| `" << d.key << "` | " << d.name << " | " << d.group_name()
        << " (" << d.group_key() << ") |\n";
  }
  std::optional<Group> current;
  for (const SmellDescriptor& d : kSmells) {
    if (current != d.group) {
      out << "\n## " << d.group_name() << " (" << d.group_key() << ")\n";
      current = d.group;
    }
    out << "\n### " << d.name << " (`" << d.key << "`)\n\n"
        << d.description << "\n\n"
        << "**Why it matters.** " << d.rationale << "\n\n"
        << "**Mitigation.** " << d.mitigation << "\n\n"
        << "Default severity: " << SeverityName(d.default_severity)
        << ". Default confidence: " << ConfidenceName(d.default_confidence)
        << ".\n";
  }
  return out.str();
}

}  // namespace smelt
