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

// CSV ingestion and strict per-column type inference.

#ifndef SMELT_INGEST_H_
#define SMELT_INGEST_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smelt {

using NullTokenSet = std::set<std::string, std::less<>>;

struct ParseOptions {
  char delimiter = ',';
  char quote = '"';
  // Compared against the trimmed cell. The empty string is always treated as
  // missing, whether or not it is listed here.
  NullTokenSet null_tokens = DefaultNullTokens();
  bool has_header = true;
  // Caps the number of data rows read.
  std::optional<std::size_t> max_rows;

  static NullTokenSet DefaultNullTokens();

  // Throws smelt::Error when delimiter == quote or max_rows == 0.
  void Validate() const;
};

// A cell is std::nullopt when missing; otherwise it holds the original,
// untrimmed text.
using Cell = std::optional<std::string>;

class RawTable {
 public:
  RawTable() = default;
  RawTable(std::string source_name, std::vector<std::string> headers,
           std::vector<Cell> cells, std::vector<std::string> warnings);

  const std::string& source_name() const { return source_name_; }
  const std::vector<std::string>& headers() const { return headers_; }
  std::size_t row_count() const { return row_count_; }
  std::size_t column_count() const { return headers_.size(); }

  const Cell& cell(std::size_t row, std::size_t column) const {
    return cells_[row * headers_.size() + column];
  }
  std::span<const Cell> row(std::size_t row) const {
    return {cells_.data() + row * headers_.size(), headers_.size()};
  }
  // Copies out one column, row order preserved.
  std::vector<Cell> column(std::size_t column) const;

  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::string source_name_;
  std::vector<std::string> headers_;
  std::vector<Cell> cells_;  // row-major
  std::size_t row_count_ = 0;
  std::vector<std::string> warnings_;
};

// Parses CSV text. `source_name` is only used for reporting.
// Throws EmptyTableError when there are no data rows and MalformedCsvError
// for an unterminated quote.
RawTable ReadCsv(std::string_view bytes, const ParseOptions& options,
                 std::string source_name = "<memory>");

// Reads the whole file then parses it; throws IoError when unreadable. The
// report names the file by `path.filename()` so output is path-independent.
RawTable ReadCsvFile(const std::filesystem::path& path,
                     const ParseOptions& options);

enum class TypeKind { kBoolean, kInteger, kFloat, kString };

std::string_view TypeName(TypeKind kind);

struct InferredType {
  TypeKind kind = TypeKind::kString;
  // Set by the profiler.
  bool is_categorical = false;

  bool is_numeric() const {
    return kind == TypeKind::kInteger || kind == TypeKind::kFloat;
  }
  friend bool operator==(const InferredType&, const InferredType&) = default;
};

// Number of non-missing cells whose trimmed text matches each candidate.
struct ParseCounts {
  std::size_t non_missing = 0;
  std::size_t boolean_like = 0;
  std::size_t integer_like = 0;
  std::size_t float_like = 0;

  friend bool operator==(const ParseCounts&, const ParseCounts&) = default;
};

// Cell matchers, applied to already-trimmed text.
bool MatchesInteger(std::string_view s);
bool MatchesFloat(std::string_view s);
bool MatchesBoolean(std::string_view s);

// Value of a MatchesFloat cell; std::nullopt for anything else.
std::optional<double> ParseNumber(std::string_view s);

struct ColumnInference {
  InferredType type;
  ParseCounts counts;
};

// Most specific of Boolean > Integer > Float > String matched by every
// non-missing cell. All-missing columns resolve to String.
ColumnInference InferColumnType(std::span<const Cell> cells);

class TypedTable {
 public:
  TypedTable() = default;
  TypedTable(RawTable raw, std::vector<InferredType> column_types,
             std::vector<ParseCounts> parse_counts);

  const RawTable& raw() const { return raw_; }
  const std::vector<InferredType>& column_types() const {
    return column_types_;
  }
  const std::vector<ParseCounts>& parse_counts() const {
    return parse_counts_;
  }

 private:
  RawTable raw_;
  std::vector<InferredType> column_types_;
  std::vector<ParseCounts> parse_counts_;
};

TypedTable ParseTable(RawTable raw);

}  // namespace smelt

#endif  // SMELT_INGEST_H_
