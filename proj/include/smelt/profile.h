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

// Column and table profiling: descriptive statistics, missingness,
// cardinality, duplicate rows and pairwise correlations. A TableProfile is
// the only input the detectors see.

#ifndef SMELT_PROFILE_H_
#define SMELT_PROFILE_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "smelt/config.h"
#include "smelt/ingest.h"
#include "smelt/patterns.h"

namespace smelt {

struct ValueCount {
  std::string value;
  std::size_t count = 0;

  friend bool operator==(const ValueCount&, const ValueCount&) = default;
};

struct NumericStats {
  double min = 0;
  double max = 0;
  double mean = 0;
  // Absent below two values.
  std::optional<double> sample_stddev;
  double q1 = 0;
  double q2 = 0;
  double q3 = 0;

  friend bool operator==(const NumericStats&, const NumericStats&) = default;
};

// Present for Boolean and String columns.
struct StringStats {
  // Cells whose trimmed form differs from the raw text.
  std::size_t whitespace_affected_count = 0;
  std::size_t distinct_after_trim_casefold = 0;
  std::size_t integer_like_count = 0;
  std::size_t float_like_count = 0;
  // String columns only.
  std::optional<PatternCensus> patterns;

  friend bool operator==(const StringStats&, const StringStats&) = default;
};

struct ColumnProfile {
  std::string name;
  std::size_t index = 0;
  InferredType inferred_type;
  std::size_t row_count = 0;
  std::size_t missing_count = 0;
  std::size_t non_missing_count = 0;
  // Numeric columns count distinct values, others distinct raw (untrimmed)
  // strings.
  std::size_t distinct_count = 0;
  // Distinct values that occur exactly once.
  std::size_t singleton_count = 0;
  // Most frequent first; ties by value, byte-wise.
  std::vector<ValueCount> top_values;
  std::optional<NumericStats> numeric;
  std::optional<StringStats> strings;
  // Ascending non-missing values of a numeric column. Not serialized.
  std::vector<double> sorted_values;

  double missing_fraction() const {
    return row_count == 0 ? 0.0
                          : static_cast<double>(missing_count) /
                                static_cast<double>(row_count);
  }

  friend bool operator==(const ColumnProfile&, const ColumnProfile&) = default;
};

struct DuplicateGroup {
  std::size_t representative = 0;
  // Ascending, includes the representative.
  std::vector<std::size_t> members;

  friend bool operator==(const DuplicateGroup&, const DuplicateGroup&) =
      default;
};

struct CorrelationEntry {
  std::size_t column_i = 0;
  std::size_t column_j = 0;
  double r = 0;
  std::size_t n_pairs = 0;

  friend bool operator==(const CorrelationEntry&, const CorrelationEntry&) =
      default;
};

struct TableProfile {
  std::string source_name;
  std::size_t row_count = 0;
  std::size_t column_count = 0;
  std::vector<ColumnProfile> columns;
  std::vector<DuplicateGroup> duplicate_groups;
  // Columns left out of the duplicate-row key (high-confidence uids).
  std::vector<std::size_t> duplicate_ignored_columns;
  std::vector<CorrelationEntry> correlations;
  std::vector<std::string> parse_warnings;

  friend bool operator==(const TableProfile&, const TableProfile&) = default;
};

// Type-7 quantile (linear interpolation between closest ranks) of an
// ascending, non-empty sample.
double Quantile(std::span<const double> sorted, double p);

// A String column is categorical when it has at most max(20, 5% of the
// non-missing count) distinct values. Boolean columns always are.
bool IsCategorical(TypeKind kind, std::size_t distinct_count,
                   std::size_t non_missing_count);

ColumnProfile ProfileColumn(const TypedTable& table, std::size_t column,
                            std::size_t top_k = 20);

struct PearsonResult {
  double r = 0;
  std::size_t n_pairs = 0;
};

// Pearson r over rows where both sides are present (NaN marks missing).
// std::nullopt when fewer than two pairs remain or either side is constant
// over them.
std::optional<PearsonResult> Pearson(std::span<const double> x,
                                     std::span<const double> y);

// Parsed values of a column, NaN where missing or non-numeric.
std::vector<double> NumericValues(const TypedTable& table, std::size_t column);

// Groups rows that agree on every column outside `ignore_columns`, comparing
// trimmed text; missing only equals missing.
std::vector<DuplicateGroup> FindDuplicateRows(
    const TypedTable& table, const std::set<std::size_t>& ignore_columns);

TableProfile ProfileTable(const TypedTable& table, const ScanConfig& config);

nlohmann::json ProfileToJson(const TableProfile& profile);

}  // namespace smelt

#endif  // SMELT_PROFILE_H_
