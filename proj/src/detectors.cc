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

#include "smelt/detectors.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <regex>

#include "smelt/catalogue.h"
#include "smelt/text.h"

namespace smelt {
namespace {

using nlohmann::json;

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Quote(std::string_view name) {
  return "'" + std::string(name) + "'";
}

Finding MakeFinding(std::string_view key, std::span<const ColumnProfile* const> cols,
                    Severity severity, Confidence confidence, json evidence,
                    std::string message) {
  const SmellDescriptor& d = Describe(key);
  Finding f;
  f.smell_key = std::string(d.key);
  f.group = d.group;
  for (const ColumnProfile* c : cols) {
    f.columns.push_back(c->name);
    f.column_indices.push_back(c->index);
  }
  f.severity = severity;
  f.confidence = confidence;
  f.evidence = std::move(evidence);
  f.suggestion = std::string(d.mitigation);
  f.message = std::move(message);
  return f;
}

Finding ColumnFinding(std::string_view key, const ColumnProfile& column,
                      Severity severity, Confidence confidence, json evidence,
                      std::string message) {
  const ColumnProfile* cols[] = {&column};
  return MakeFinding(key, cols, severity, confidence, std::move(evidence),
                     std::move(message));
}

double Fraction(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0
                    : static_cast<double>(part) / static_cast<double>(whole);
}

bool NameMatches(const std::string& pattern, std::string_view column_name) {
  const std::regex re(pattern, std::regex::ECMAScript);
  return std::regex_search(NormalizeName(column_name), re);
}

// First lexicon phrase found as whole tokens in the column name.
std::optional<std::string> MatchLexicon(const std::set<std::string>& lexicon,
                                        std::string_view column_name) {
  const std::string normalized = NormalizeName(column_name);
  for (const std::string& entry : lexicon) {
    if (ContainsPhrase(normalized, NormalizeName(entry))) return entry;
  }
  return std::nullopt;
}

bool IsIntegerSequence(const ColumnProfile& c) {
  if (c.inferred_type.kind != TypeKind::kInteger || !c.numeric) return false;
  return c.numeric->max - c.numeric->min + 1.0 ==
         static_cast<double>(c.distinct_count);
}

struct UidMatch {
  Confidence confidence;
  std::string rule;
};

std::optional<UidMatch> MatchUid(const ColumnProfile& c,
                                 const ScanConfig& config) {
  const TypeKind kind = c.inferred_type.kind;
  if (kind != TypeKind::kInteger && kind != TypeKind::kString) return {};
  if (c.row_count < config.uid_min_rows || c.missing_count != 0 ||
      c.distinct_count != c.non_missing_count) {
    return {};
  }
  const bool by_name = NameMatches(config.uid_name_pattern, c.name);
  const bool by_sequence = IsIntegerSequence(c);
  if (by_name && by_sequence) return UidMatch{Confidence::kHigh, "name+sequence"};
  if (by_name) return UidMatch{Confidence::kHigh, "name"};
  if (by_sequence) return UidMatch{Confidence::kHigh, "sequence"};
  return UidMatch{Confidence::kMedium, "all_distinct"};
}

bool MissBinHolds(const ColumnProfile& c, const ScanConfig& config) {
  if (c.missing_count == 0 || c.distinct_count != 1 || c.top_values.empty()) {
    return false;
  }
  if (c.missing_fraction() < config.binary_missing_fraction) return false;
  return config.positive_response_lexicon.contains(
      CaseFold(Trim(c.top_values.front().value)));
}

bool StrHumanHolds(const ColumnProfile& c, const ScanConfig& config) {
  if (c.inferred_type.kind != TypeKind::kString || !c.strings ||
      !c.strings->patterns || c.non_missing_count == 0) {
    return false;
  }
  const PatternCensus& p = *c.strings->patterns;
  return Fraction(p.count(StrPattern::kNumWithUnit), c.non_missing_count) >=
             config.str_pattern_fraction &&
         p.unit_words.size() >= 2;
}

std::string RenderInteger(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
  return buf;
}

}  // namespace

std::set<std::size_t> HighConfidenceUidColumns(
    std::span<const ColumnProfile> columns, const ScanConfig& config) {
  std::set<std::size_t> out;
  for (const ColumnProfile& c : columns) {
    auto match = MatchUid(c, config);
    if (match && match->confidence == Confidence::kHigh) out.insert(c.index);
  }
  return out;
}

Findings DetectRedCorr(const TableProfile& profile, const ScanConfig& config) {
  Findings out;
  for (const CorrelationEntry& e : profile.correlations) {
    if (std::fabs(e.r) < config.corr_threshold ||
        e.n_pairs < config.corr_min_pairs) {
      continue;
    }
    const ColumnProfile& a = profile.columns[e.column_i];
    const ColumnProfile& b = profile.columns[e.column_j];
    const ColumnProfile* cols[] = {&a, &b};
    out.push_back(MakeFinding(
        "red-corr", cols, Severity::kWarning, Confidence::kHigh,
        {{"r", e.r}, {"n_pairs", e.n_pairs}},
        "columns " + Quote(a.name) + " and " + Quote(b.name) +
            " are strongly correlated (r = " + Fixed(e.r, 3) + ", " +
            std::to_string(e.n_pairs) + " pairs)"));
  }
  return out;
}

Findings DetectRedUid(const TableProfile& profile, const ScanConfig& config) {
  Findings out;
  for (const ColumnProfile& c : profile.columns) {
    const auto match = MatchUid(c, config);
    if (!match) continue;
    out.push_back(ColumnFinding(
        "red-uid", c, Severity::kWarning, match->confidence,
        {{"distinct_ratio", 1.0},
         {"distinct_count", c.distinct_count},
         {"matched_rule", match->rule}},
        "column " + Quote(c.name) + " has a distinct value in every row (" +
            std::to_string(c.distinct_count) + " rows)"));
  }
  return out;
}

Findings DetectRedDup(const TableProfile& profile, const ScanConfig&) {
  Findings out;
  if (profile.duplicate_groups.empty()) return out;
  std::size_t redundant = 0;
  for (const DuplicateGroup& g : profile.duplicate_groups) {
    redundant += g.members.size() - 1;
  }
  json ignored = json::array();
  for (std::size_t c : profile.duplicate_ignored_columns) {
    ignored.push_back(profile.columns[c].name);
  }
  out.push_back(MakeFinding(
      "red-dup", {}, Severity::kWarning, Confidence::kHigh,
      {{"duplicate_groups", profile.duplicate_groups.size()},
       {"redundant_rows", redundant},
       {"ignored_columns", std::move(ignored)}},
      std::to_string(redundant) + " redundant row(s) in " +
          std::to_string(profile.duplicate_groups.size()) +
          " group(s) of duplicate rows"));
  return out;
}

Findings DetectCatHierarchy(const TableProfile& profile,
                            const ScanConfig& config) {
  Findings out;
  for (const ColumnProfile& c : profile.columns) {
    if (!c.inferred_type.is_categorical) continue;
    const auto term = MatchLexicon(config.sensitive_lexicon, c.name);
    if (!term) continue;
    out.push_back(ColumnFinding(
        "cat-hierarchy", c, Severity::kWarning, Confidence::kMedium,
        {{"distinct_count", c.distinct_count}, {"matched_term", *term}},
        "sensitive categorical column " + Quote(c.name) +
            " must not be label encoded"));
  }
  return out;
}

Findings DetectCatBin(const TableProfile& profile, const ScanConfig& config) {
  Findings out;
  for (const ColumnProfile& c : profile.columns) {
    if (c.inferred_type.kind != TypeKind::kString &&
        !c.inferred_type.is_categorical) {
      continue;
    }
    if (c.distinct_count < config.high_cardinality_threshold ||
        static_cast<double>(c.distinct_count) >=
            0.5 * static_cast<double>(c.non_missing_count)) {
      continue;
    }
    out.push_back(ColumnFinding(
        "cat-bin", c, Severity::kInfo, Confidence::kMedium,
        {{"distinct_count", c.distinct_count},
         {"tail_fraction", Fraction(c.singleton_count, c.distinct_count)}},
        "categorical column " + Quote(c.name) + " has " +
            std::to_string(c.distinct_count) + " distinct values"));
  }
  return out;
}

Findings DetectMiscUnit(const TableProfile& profile, const ScanConfig& config) {
  Findings out;
  for (const ColumnProfile& c : profile.columns) {
    if (!c.inferred_type.is_numeric()) continue;
    const auto quantity = MatchLexicon(config.quantity_lexicon, c.name);
    if (!quantity) continue;
    const std::vector<std::string> segments = UnitSegments(c.name);
    const bool has_unit =
        std::any_of(segments.begin(), segments.end(), [&](const auto& s) {
          return config.unit_token_lexicon.contains(s);
        });
    if (has_unit) continue;
    out.push_back(ColumnFinding(
        "misc-unit", c, Severity::kInfo, Confidence::kLow,
        {{"quantity_term", *quantity}},
        "numeric column " + Quote(c.name) +
            " measures a quantity but names no unit"));
  }
  return out;
}

Findings DetectMiscBalance(const TableProfile& profile,
                           const ScanConfig& config) {
  Findings out;
  for (const ColumnProfile& c : profile.columns) {
    const bool class_like = c.inferred_type.is_categorical ||
                            c.inferred_type.kind == TypeKind::kInteger;
    if (!class_like || c.distinct_count < 2 || c.distinct_count > 10 ||
        c.top_values.size() != c.distinct_count) {
      continue;
    }
    const ValueCount& rarest = c.top_values.back();
    const double minority = Fraction(rarest.count, c.non_missing_count);
    const double limit =
        config.imbalance_ratio / static_cast<double>(c.distinct_count);
    if (minority >= limit) continue;
    json histogram = json::object();
    for (const ValueCount& v : c.top_values) histogram[v.value] = v.count;
    const bool target = NameMatches(config.target_name_pattern, c.name);
    out.push_back(ColumnFinding(
        "misc-balance", c, target ? Severity::kError : Severity::kInfo,
        Confidence::kMedium,
        {{"class_histogram", std::move(histogram)},
         {"minority_class", rarest.value},
         {"minority_fraction", minority},
         {"distinct_count", c.distinct_count}},
        "class " + Quote(rarest.value) + " of column " + Quote(c.name) +
            " covers only " + Fixed(100.0 * minority, 2) + "% of rows"));
  }
  return out;
}

Findings DetectMiscSensitive(const TableProfile& profile,
                             const ScanConfig& config) {
  Findings out;
  for (const ColumnProfile& c : profile.columns) {
    const auto term = MatchLexicon(config.sensitive_lexicon, c.name);
    if (!term) continue;
    out.push_back(ColumnFinding(
        "misc-sensitive", c, Severity::kWarning, Confidence::kMedium,
        {{"matched_term", *term}},
        "column " + Quote(c.name) + " holds a sensitive attribute (" + *term +
            ")"));
  }
  return out;
}

Findings DetectMissNull(const TableProfile& profile, const ScanConfig& config) {
  Findings out;
  std::size_t missing_cells = 0;
  std::size_t affected_columns = 0;
  for (const ColumnProfile& c : profile.columns) {
    missing_cells += c.missing_count;
    affected_columns += c.missing_count > 0 ? 1 : 0;
  }
  const std::size_t total_cells = profile.row_count * profile.column_count;
  if (missing_cells > 0) {
    const double fraction = Fraction(missing_cells, total_cells);
    Finding f = MakeFinding(
        "miss-null", {}, Severity::kInfo, Confidence::kHigh,
        {{"missing_fraction", fraction},
         {"missing_cells", missing_cells},
         {"columns_with_missing", affected_columns}},
        Fixed(100.0 * fraction, 2) + "% of all cells are missing");
    out.push_back(std::move(f));
  }
  for (const ColumnProfile& c : profile.columns) {
    if (c.missing_count == 0 ||
        c.missing_fraction() < config.missing_fraction_threshold ||
        MissBinHolds(c, config)) {
      continue;
    }
    out.push_back(ColumnFinding(
        "miss-null", c, Severity::kWarning, Confidence::kHigh,
        {{"missing_fraction", c.missing_fraction()},
         {"missing_count", c.missing_count}},
        "column " + Quote(c.name) + " is " +
            Fixed(100.0 * c.missing_fraction(), 2) + "% missing"));
  }
  return out;
}

Findings DetectMissSpVal(const TableProfile& profile,
                         const ScanConfig& config) {
  Findings out;
  const std::regex number_pattern(config.sentinel_number_pattern,
                                  std::regex::ECMAScript);
  for (const ColumnProfile& c : profile.columns) {
    if (c.non_missing_count == 0) continue;
    if (!c.inferred_type.is_numeric()) {
      std::map<std::string, std::size_t> tokens;
      for (const ValueCount& v : c.top_values) {
        std::string folded = CaseFold(Trim(v.value));
        if (config.sentinel_string_lexicon.contains(folded)) {
          tokens[folded] += v.count;
        }
      }
      const std::pair<const std::string, std::size_t>* best = nullptr;
      for (const auto& entry : tokens) {
        if (Fraction(entry.second, c.non_missing_count) <
            config.sentinel_min_fraction) {
          continue;
        }
        if (best == nullptr || entry.second > best->second) best = &entry;
      }
      if (best == nullptr) continue;
      const double fraction = Fraction(best->second, c.non_missing_count);
      out.push_back(ColumnFinding(
          "miss-sp-val", c, Severity::kError, Confidence::kMedium,
          {{"token", best->first},
           {"count", best->second},
           {"fraction", fraction}},
          "column " + Quote(c.name) + " encodes missing values as " +
              Quote(best->first) + " (" + std::to_string(best->second) +
              " cells)"));
      continue;
    }

    const std::vector<double>& values = c.sorted_values;
    struct Candidate {
      double value;
      std::size_t count;
      double fence_low;
      double fence_high;
    };
    std::optional<Candidate> best;
    for (std::size_t i = 0; i < values.size();) {
      std::size_t j = i;
      while (j < values.size() && values[j] == values[i]) ++j;
      const double v = values[i];
      const std::size_t count = j - i;
      const std::size_t start = i;
      i = j;
      if (Fraction(count, c.non_missing_count) < config.sentinel_min_fraction ||
          v != std::floor(v) || std::fabs(v) >= 1e18 ||
          !std::regex_search(RenderInteger(v), number_pattern)) {
        continue;
      }
      // Fences over the column with this value taken out.
      std::vector<double> rest;
      rest.reserve(values.size() - count);
      rest.insert(rest.end(), values.begin(), values.begin() + start);
      rest.insert(rest.end(), values.begin() + j, values.end());
      if (rest.empty()) continue;
      const double q1 = Quantile(rest, 0.25);
      const double q3 = Quantile(rest, 0.75);
      const double iqr = q3 - q1;
      const double low = q1 - 3.0 * iqr;
      const double high = q3 + 3.0 * iqr;
      if (v >= low && v <= high) continue;
      if (!best || count > best->count) best = Candidate{v, count, low, high};
    }
    if (!best) continue;
    out.push_back(ColumnFinding(
        "miss-sp-val", c, Severity::kError, Confidence::kMedium,
        {{"sentinel", best->value},
         {"count", best->count},
         {"fraction", Fraction(best->count, c.non_missing_count)},
         {"fence_low", best->fence_low},
         {"fence_high", best->fence_high}},
        "column " + Quote(c.name) + " uses " + RenderInteger(best->value) +
            " as a stand-in for missing values (" +
            std::to_string(best->count) + " cells)"));
  }
  return out;
}

Findings DetectMissBin(const TableProfile& profile, const ScanConfig& config) {
  Findings out;
  for (const ColumnProfile& c : profile.columns) {
    if (!MissBinHolds(c, config)) continue;
    const std::string& value = c.top_values.front().value;
    out.push_back(ColumnFinding(
        "miss-bin", c, Severity::kWarning, Confidence::kMedium,
        {{"missing_fraction", c.missing_fraction()},
         {"missing_count", c.missing_count},
         {"value", std::string(Trim(value))}},
        "column " + Quote(c.name) + " is " +
            Fixed(100.0 * c.missing_fraction(), 2) +
            "% missing and otherwise always " + Quote(Trim(value)) +
            "; missing likely means the negative response"));
  }
  return out;
}

Findings DetectStrNum(const TableProfile& profile, const ScanConfig& config) {
  Findings out;
  for (const ColumnProfile& c : profile.columns) {
    if (c.inferred_type.kind != TypeKind::kString || !c.strings ||
        !c.strings->patterns || c.non_missing_count == 0) {
      continue;
    }
    const PatternCensus& p = *c.strings->patterns;
    const double coverage = Fraction(p.numeric_like(), c.non_missing_count);
    if (coverage < config.str_pattern_fraction || StrHumanHolds(c, config)) {
      continue;
    }
    json counts = json::object();
    for (std::size_t k = 0; k < kStrPatternCount; ++k) {
      counts[std::string(StrPatternName(static_cast<StrPattern>(k)))] =
          p.counts[k];
    }
    const std::string_view dominant = StrPatternName(p.dominant_numeric());
    out.push_back(ColumnFinding(
        "str-num", c, Severity::kWarning, Confidence::kMedium,
        {{"dominant_pattern", dominant},
         {"coverage", coverage},
         {"pattern_counts", std::move(counts)}},
        "string column " + Quote(c.name) + " holds numbers (" +
            std::string(dominant) + ", " + Fixed(100.0 * coverage, 2) +
            "% of values)"));
  }
  return out;
}

Findings DetectStrSanitise(const TableProfile& profile, const ScanConfig&) {
  Findings out;
  for (const ColumnProfile& c : profile.columns) {
    const TypeKind kind = c.inferred_type.kind;
    if ((kind != TypeKind::kString && kind != TypeKind::kBoolean) ||
        !c.strings) {
      continue;
    }
    const StringStats& s = *c.strings;
    if (s.whitespace_affected_count == 0 &&
        s.distinct_after_trim_casefold >= c.distinct_count) {
      continue;
    }
    out.push_back(ColumnFinding(
        "str-sanitise", c, Severity::kWarning, Confidence::kHigh,
        {{"affected_cells", s.whitespace_affected_count},
         {"distinct_before", c.distinct_count},
         {"distinct_after", s.distinct_after_trim_casefold}},
        "column " + Quote(c.name) + " has " +
            std::to_string(s.whitespace_affected_count) +
            " cell(s) with surrounding whitespace; distinct values " +
            std::to_string(c.distinct_count) + " -> " +
            std::to_string(s.distinct_after_trim_casefold) +
            " after trimming and case folding"));
  }
  return out;
}

Findings DetectStrHuman(const TableProfile& profile, const ScanConfig& config) {
  Findings out;
  for (const ColumnProfile& c : profile.columns) {
    if (!StrHumanHolds(c, config)) continue;
    const PatternCensus& p = *c.strings->patterns;
    const double coverage =
        Fraction(p.count(StrPattern::kNumWithUnit), c.non_missing_count);
    std::string units;
    for (const std::string& u : p.unit_words) {
      if (!units.empty()) units += ", ";
      units += u;
    }
    out.push_back(ColumnFinding(
        "str-human", c, Severity::kWarning, Confidence::kMedium,
        {{"units", p.unit_words}, {"coverage", coverage}},
        "column " + Quote(c.name) + " mixes human-readable units {" + units +
            "}"));
  }
  return out;
}

bool FindingOrder(const Finding& a, const Finding& b) {
  const std::size_t ra = CatalogueRank(a.smell_key);
  const std::size_t rb = CatalogueRank(b.smell_key);
  if (ra != rb) return ra < rb;
  return a.column_indices < b.column_indices;
}

Findings RunAll(const TableProfile& profile, const ScanConfig& config) {
  using Detector = Findings (*)(const TableProfile&, const ScanConfig&);
  static constexpr std::pair<std::string_view, Detector> kDetectors[] = {
      {"red-corr", DetectRedCorr},
      {"red-uid", DetectRedUid},
      {"red-dup", DetectRedDup},
      {"cat-hierarchy", DetectCatHierarchy},
      {"cat-bin", DetectCatBin},
      {"misc-unit", DetectMiscUnit},
      {"misc-balance", DetectMiscBalance},
      {"misc-sensitive", DetectMiscSensitive},
      {"miss-null", DetectMissNull},
      {"miss-sp-val", DetectMissSpVal},
      {"miss-bin", DetectMissBin},
      {"str-num", DetectStrNum},
      {"str-sanitise", DetectStrSanitise},
      {"str-human", DetectStrHuman},
  };
  Findings all;
  for (const auto& [key, detect] : kDetectors) {
    if (!config.IsEnabled(key)) continue;
    Findings found = detect(profile, config);
    const auto override_it = config.severity_overrides.find(std::string(key));
    for (Finding& f : found) {
      if (override_it != config.severity_overrides.end()) {
        f.severity = override_it->second;
      }
      all.push_back(std::move(f));
    }
  }
  std::stable_sort(all.begin(), all.end(), FindingOrder);
  return all;
}

}  // namespace smelt
