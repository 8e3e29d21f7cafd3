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

#include "smelt/profile.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "smelt/detectors.h"
#include "smelt/text.h"

namespace smelt {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string FormatNumberKey(double v) {
  v += 0.0;  // -0 -> 0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

void SortTopValues(std::vector<ValueCount>& values, std::size_t top_k) {
  const auto by_frequency = [](const ValueCount& a, const ValueCount& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.value < b.value;
  };
  if (values.size() > top_k) {
    std::partial_sort(values.begin(), values.begin() + top_k, values.end(),
                      by_frequency);
    values.resize(top_k);
  } else {
    std::sort(values.begin(), values.end(), by_frequency);
  }
}

void ProfileNumeric(const TypedTable& table, std::size_t column,
                    std::size_t top_k, ColumnProfile& out) {
  const RawTable& raw = table.raw();
  std::vector<double>& values = out.sorted_values;
  values.reserve(out.non_missing_count);
  for (std::size_t r = 0; r < raw.row_count(); ++r) {
    const Cell& cell = raw.cell(r, column);
    if (!cell) continue;
    if (auto v = ParseNumber(Trim(*cell))) values.push_back(*v + 0.0);
  }
  std::sort(values.begin(), values.end());

  // Runs of equal values give distinct counts and the frequency table.
  std::vector<ValueCount> counts;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    counts.push_back({FormatNumberKey(values[i]), j - i});
    if (j - i == 1) ++out.singleton_count;
    i = j;
  }
  out.distinct_count = counts.size();
  SortTopValues(counts, top_k);
  out.top_values = std::move(counts);

  if (values.empty()) return;
  NumericStats stats;
  stats.min = values.front();
  stats.max = values.back();
  long double sum = 0;
  for (double v : values) sum += v;
  const long double mean = sum / static_cast<long double>(values.size());
  stats.mean = static_cast<double>(mean);
  if (values.size() >= 2) {
    long double ss = 0;
    for (double v : values) {
      const long double d = v - mean;
      ss += d * d;
    }
    stats.sample_stddev = static_cast<double>(
        std::sqrt(ss / static_cast<long double>(values.size() - 1)));
  }
  stats.q1 = Quantile(values, 0.25);
  stats.q2 = Quantile(values, 0.50);
  stats.q3 = Quantile(values, 0.75);
  out.numeric = stats;
}

void ProfileText(const TypedTable& table, std::size_t column,
                 std::size_t top_k, ColumnProfile& out) {
  const RawTable& raw = table.raw();
  std::unordered_map<std::string_view, std::size_t> counts;
  std::unordered_set<std::string> folded;
  StringStats stats;
  const bool census = out.inferred_type.kind == TypeKind::kString;
  PatternCensus patterns;
  for (std::size_t r = 0; r < raw.row_count(); ++r) {
    const Cell& cell = raw.cell(r, column);
    if (!cell) continue;
    ++counts[*cell];
    const std::string_view trimmed = Trim(*cell);
    if (trimmed.size() != cell->size()) ++stats.whitespace_affected_count;
    if (census) patterns.Add(trimmed);
  }
  std::vector<ValueCount> values;
  values.reserve(counts.size());
  for (const auto& [value, count] : counts) {
    folded.insert(CaseFold(Trim(value)));
    values.push_back({std::string(value), count});
    if (count == 1) ++out.singleton_count;
  }
  out.distinct_count = counts.size();
  SortTopValues(values, top_k);
  out.top_values = std::move(values);

  const ParseCounts& parse = table.parse_counts()[column];
  stats.distinct_after_trim_casefold = folded.size();
  stats.integer_like_count = parse.integer_like;
  stats.float_like_count = parse.float_like;
  if (census) stats.patterns = std::move(patterns);
  out.strings = std::move(stats);
}

std::uint64_t HashBytes(std::string_view s, std::uint64_t h) {
  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

double Quantile(std::span<const double> sorted, double p) {
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted[sorted.size() - 1];
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

bool IsCategorical(TypeKind kind, std::size_t distinct_count,
                   std::size_t non_missing_count) {
  if (kind == TypeKind::kBoolean) return true;
  if (kind != TypeKind::kString) return false;
  const double limit =
      std::max(20.0, 0.05 * static_cast<double>(non_missing_count));
  return non_missing_count > 0 &&
         static_cast<double>(distinct_count) <= limit;
}

ColumnProfile ProfileColumn(const TypedTable& table, std::size_t column,
                            std::size_t top_k) {
  const RawTable& raw = table.raw();
  ColumnProfile out;
  out.name = raw.headers()[column];
  out.index = column;
  out.inferred_type = table.column_types()[column];
  out.row_count = raw.row_count();
  out.non_missing_count = table.parse_counts()[column].non_missing;
  out.missing_count = out.row_count - out.non_missing_count;
  if (out.inferred_type.is_numeric()) {
    ProfileNumeric(table, column, top_k, out);
  } else {
    ProfileText(table, column, top_k, out);
  }
  out.inferred_type.is_categorical = IsCategorical(
      out.inferred_type.kind, out.distinct_count, out.non_missing_count);
  return out;
}

std::optional<PearsonResult> Pearson(std::span<const double> x,
                                     std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  std::size_t pairs = 0;
  long double sx = 0, sy = 0;
  double first_x = kNaN, first_y = kNaN;
  bool x_varies = false, y_varies = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(x[i]) || std::isnan(y[i])) continue;
    if (pairs == 0) {
      first_x = x[i];
      first_y = y[i];
    } else {
      x_varies = x_varies || x[i] != first_x;
      y_varies = y_varies || y[i] != first_y;
    }
    sx += x[i];
    sy += y[i];
    ++pairs;
  }
  if (pairs < 2 || !x_varies || !y_varies) return std::nullopt;
  const long double mx = sx / pairs;
  const long double my = sy / pairs;
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(x[i]) || std::isnan(y[i])) continue;
    const long double dx = x[i] - mx;
    const long double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  // Population covariance over population deviations; the 1/n factors
  // cancel.
  double r = static_cast<double>(sxy / std::sqrt(sxx * syy));
  r = std::clamp(r, -1.0, 1.0);
  return PearsonResult{r, pairs};
}

std::vector<double> NumericValues(const TypedTable& table,
                                  std::size_t column) {
  const RawTable& raw = table.raw();
  std::vector<double> out(raw.row_count(), kNaN);
  for (std::size_t r = 0; r < raw.row_count(); ++r) {
    const Cell& cell = raw.cell(r, column);
    if (!cell) continue;
    if (auto v = ParseNumber(Trim(*cell))) out[r] = *v;
  }
  return out;
}

std::vector<DuplicateGroup> FindDuplicateRows(
    const TypedTable& table, const std::set<std::size_t>& ignore_columns) {
  const RawTable& raw = table.raw();
  std::vector<std::size_t> key_columns;
  for (std::size_t c = 0; c < raw.column_count(); ++c) {
    if (!ignore_columns.contains(c)) key_columns.push_back(c);
  }
  const auto rows_equal = [&](std::size_t a, std::size_t b) {
    for (std::size_t c : key_columns) {
      const Cell& x = raw.cell(a, c);
      const Cell& y = raw.cell(b, c);
      if (x.has_value() != y.has_value()) return false;
      if (x && Trim(*x) != Trim(*y)) return false;
    }
    return true;
  };

  // hash -> indices into `groups`
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<DuplicateGroup> groups;
  for (std::size_t r = 0; r < raw.row_count(); ++r) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t c : key_columns) {
      const Cell& cell = raw.cell(r, c);
      if (cell) {
        h = HashBytes(Trim(*cell), h);
        h = HashBytes(std::string_view("\x1f", 1), h);
      } else {
        h = HashBytes(std::string_view("\x1e\x00", 2), h);
      }
    }
    std::vector<std::size_t>& bucket = buckets[h];
    bool placed = false;
    for (std::size_t g : bucket) {
      if (rows_equal(groups[g].representative, r)) {
        groups[g].members.push_back(r);
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket.push_back(groups.size());
      groups.push_back({r, {r}});
    }
  }
  std::vector<DuplicateGroup> out;
  for (DuplicateGroup& g : groups) {
    if (g.members.size() >= 2) out.push_back(std::move(g));
  }
  return out;
}

TableProfile ProfileTable(const TypedTable& table, const ScanConfig& config) {
  const RawTable& raw = table.raw();
  TableProfile profile;
  profile.source_name = raw.source_name();
  profile.row_count = raw.row_count();
  profile.column_count = raw.column_count();
  profile.parse_warnings = raw.warnings();
  profile.columns.reserve(raw.column_count());
  for (std::size_t c = 0; c < raw.column_count(); ++c) {
    profile.columns.push_back(ProfileColumn(table, c, config.top_k));
  }

  std::vector<std::size_t> numeric;
  std::vector<std::vector<double>> values(raw.column_count());
  for (std::size_t c = 0; c < raw.column_count(); ++c) {
    if (table.column_types()[c].is_numeric()) {
      numeric.push_back(c);
      values[c] = NumericValues(table, c);
    }
  }
  for (std::size_t a = 0; a < numeric.size(); ++a) {
    for (std::size_t b = a + 1; b < numeric.size(); ++b) {
      const std::size_t i = numeric[a], j = numeric[b];
      if (auto result = Pearson(values[i], values[j])) {
        profile.correlations.push_back({i, j, result->r, result->n_pairs});
      }
    }
  }

  const std::set<std::size_t> uid_columns =
      HighConfidenceUidColumns(profile.columns, config);
  profile.duplicate_ignored_columns.assign(uid_columns.begin(),
                                           uid_columns.end());
  profile.duplicate_groups = FindDuplicateRows(table, uid_columns);
  return profile;
}

nlohmann::json ProfileToJson(const TableProfile& profile) {
  using nlohmann::json;
  json columns = json::array();
  for (const ColumnProfile& c : profile.columns) {
    json top = json::array();
    for (const ValueCount& v : c.top_values) {
      top.push_back({{"value", v.value}, {"count", v.count}});
    }
    json col = {
        {"name", c.name},
        {"index", c.index},
        {"type", TypeName(c.inferred_type.kind)},
        {"is_categorical", c.inferred_type.is_categorical},
        {"row_count", c.row_count},
        {"missing_count", c.missing_count},
        {"non_missing_count", c.non_missing_count},
        {"distinct_count", c.distinct_count},
        {"singleton_count", c.singleton_count},
        {"top_values", std::move(top)},
    };
    if (c.numeric) {
      const NumericStats& n = *c.numeric;
      col["numeric"] = {{"min", n.min},   {"max", n.max}, {"mean", n.mean},
                        {"q1", n.q1},     {"q2", n.q2},   {"q3", n.q3},
                        {"sample_stddev", n.sample_stddev
                                              ? json(*n.sample_stddev)
                                              : json(nullptr)}};
    }
    if (c.strings) {
      const StringStats& s = *c.strings;
      json str = {
          {"whitespace_affected_count", s.whitespace_affected_count},
          {"distinct_after_trim_casefold", s.distinct_after_trim_casefold},
          {"integer_like_count", s.integer_like_count},
          {"float_like_count", s.float_like_count},
      };
      if (s.patterns) {
        json counts = json::object();
        for (std::size_t k = 0; k < kStrPatternCount; ++k) {
          counts[std::string(StrPatternName(static_cast<StrPattern>(k)))] =
              s.patterns->counts[k];
        }
        str["patterns"] = {{"counts", std::move(counts)},
                           {"unit_words", s.patterns->unit_words}};
      }
      col["strings"] = std::move(str);
    }
    columns.push_back(std::move(col));
  }
  json duplicates = json::array();
  for (const DuplicateGroup& g : profile.duplicate_groups) {
    duplicates.push_back(
        {{"representative", g.representative}, {"members", g.members}});
  }
  json correlations = json::array();
  for (const CorrelationEntry& e : profile.correlations) {
    correlations.push_back({{"column_i", e.column_i},
                            {"column_j", e.column_j},
                            {"r", e.r},
                            {"n_pairs", e.n_pairs}});
  }
  return {
      {"schema", "smelt/1"},
      {"kind", "profile"},
      {"source", profile.source_name},
      {"rows", profile.row_count},
      {"columns", profile.column_count},
      {"parse_warnings", profile.parse_warnings},
      {"column_profiles", std::move(columns)},
      {"duplicate_groups", std::move(duplicates)},
      {"duplicate_ignored_columns", profile.duplicate_ignored_columns},
      {"correlations", std::move(correlations)},
  };
}

}  // namespace smelt
