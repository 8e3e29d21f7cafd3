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

#include "smelt/ingest.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "smelt/errors.h"
#include "smelt/text.h"

namespace smelt {
namespace {

constexpr std::string_view kReplacementChar = "\xEF\xBF\xBD";

// Length of the valid UTF-8 sequence starting at `i`, or 0 if invalid.
std::size_t Utf8SequenceLength(std::string_view s, std::size_t i) {
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(s[k]);
  };
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) return 1;
  std::size_t len = 0;
  unsigned char lo = 0x80, hi = 0xBF;
  if (b0 >= 0xC2 && b0 <= 0xDF) {
    len = 2;
  } else if (b0 >= 0xE0 && b0 <= 0xEF) {
    len = 3;
    if (b0 == 0xE0) lo = 0xA0;
    if (b0 == 0xED) hi = 0x9F;  // no surrogates
  } else if (b0 >= 0xF0 && b0 <= 0xF4) {
    len = 4;
    if (b0 == 0xF0) lo = 0x90;
    if (b0 == 0xF4) hi = 0x8F;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  const unsigned char b1 = byte(i + 1);
  if (b1 < lo || b1 > hi) return 0;
  for (std::size_t k = 2; k < len; ++k) {
    const unsigned char b = byte(i + k);
    if (b < 0x80 || b > 0xBF) return 0;
  }
  return len;
}

// Returns the number of replaced bytes; `out` is only written when non-zero.
std::size_t SanitizeUtf8(std::string_view in, std::string& out) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < in.size();) {
    const std::size_t len = Utf8SequenceLength(in, i);
    if (len == 0) {
      if (bad == 0) out.assign(in.substr(0, i));
      out += kReplacementChar;
      ++bad;
      ++i;
      continue;
    }
    if (bad > 0) out.append(in.substr(i, len));
    i += len;
  }
  return bad;
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

class CsvParser {
 public:
  CsvParser(std::string_view text, const ParseOptions& options)
      : text_(text), options_(options) {}

  // Reads one record into `fields`; returns false at end of input.
  bool NextRecord(std::vector<std::string>& fields) {
    fields.clear();
    // Blank lines carry no record.
    while (pos_ < text_.size() && (text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ConsumeNewline();
    }
    if (pos_ >= text_.size()) return false;

    std::string field;
    while (true) {
      field.clear();
      bool end_of_record = ReadField(field);
      fields.push_back(std::move(field));
      if (end_of_record) break;
    }
    return true;
  }

 private:
  void ConsumeNewline() {
    if (text_[pos_] == '\r' && pos_ + 1 < text_.size() &&
        text_[pos_ + 1] == '\n') {
      pos_ += 2;
    } else {
      ++pos_;
    }
  }

  // Returns true when the field ended the record.
  bool ReadField(std::string& field) {
    const char delim = options_.delimiter;
    const char quote = options_.quote;
    if (pos_ < text_.size() && text_[pos_] == quote) {
      const std::size_t open_offset = pos_;
      ++pos_;
      while (true) {
        const std::size_t next = text_.find(quote, pos_);
        if (next == std::string_view::npos) {
          throw MalformedCsvError(
              "unterminated quoted field starting at byte offset " +
                  std::to_string(open_offset),
              open_offset);
        }
        field.append(text_.substr(pos_, next - pos_));
        pos_ = next + 1;
        if (pos_ < text_.size() && text_[pos_] == quote) {
          field.push_back(quote);
          ++pos_;
          continue;
        }
        break;
      }
      // Anything between the closing quote and the delimiter is kept verbatim.
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == delim) {
        field.append(text_.substr(start, pos_ - start));
        ++pos_;
        return false;
      }
      if (c == '\n' || c == '\r') {
        field.append(text_.substr(start, pos_ - start));
        ConsumeNewline();
        return true;
      }
      ++pos_;
    }
    field.append(text_.substr(start, pos_ - start));
    return true;
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

std::vector<std::string> DisambiguateHeaders(std::vector<std::string> raw,
                                             std::size_t width) {
  std::vector<std::string> headers;
  headers.reserve(width);
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < width; ++i) {
    std::string name =
        i < raw.size() ? std::string(Trim(raw[i])) : std::string();
    if (name.empty()) name = "col_" + std::to_string(i);
    std::string unique = name;
    for (int suffix = 1; seen.count(unique) > 0; ++suffix) {
      unique = name + "." + std::to_string(suffix);
    }
    seen.insert(unique);
    headers.push_back(std::move(unique));
  }
  return headers;
}

}  // namespace

NullTokenSet ParseOptions::DefaultNullTokens() {
  return {"", "NA", "N/A", "NaN", "nan", "null", "NULL", "nil", "None"};
}

void ParseOptions::Validate() const {
  if (delimiter == quote) {
    throw Error("delimiter and quote character must differ");
  }
  if (delimiter == '\n' || delimiter == '\r' || quote == '\n' ||
      quote == '\r') {
    throw Error("delimiter and quote must not be line terminators");
  }
  if (max_rows.has_value() && *max_rows == 0) {
    throw Error("max_rows must be positive");
  }
}

RawTable::RawTable(std::string source_name, std::vector<std::string> headers,
                   std::vector<Cell> cells, std::vector<std::string> warnings)
    : source_name_(std::move(source_name)),
      headers_(std::move(headers)),
      cells_(std::move(cells)),
      warnings_(std::move(warnings)) {
  row_count_ = headers_.empty() ? 0 : cells_.size() / headers_.size();
}

std::vector<Cell> RawTable::column(std::size_t column) const {
  std::vector<Cell> out;
  out.reserve(row_count_);
  for (std::size_t r = 0; r < row_count_; ++r) out.push_back(cell(r, column));
  return out;
}

RawTable ReadCsv(std::string_view bytes, const ParseOptions& options,
                 std::string source_name) {
  options.Validate();
  std::vector<std::string> warnings;

  if (bytes.starts_with("\xEF\xBB\xBF")) bytes.remove_prefix(3);
  std::string sanitized;
  if (const std::size_t bad = SanitizeUtf8(bytes, sanitized); bad > 0) {
    warnings.push_back("replaced " + std::to_string(bad) +
                       " invalid UTF-8 byte(s) with U+FFFD");
    bytes = sanitized;
  }

  CsvParser parser(bytes, options);
  std::vector<std::string> fields;
  std::vector<std::string> header_fields;
  if (options.has_header) {
    if (!parser.NextRecord(header_fields)) {
      throw EmptyTableError(source_name + ": no header row and no data rows");
    }
  }

  const auto is_missing = [&](std::string_view value) {
    const std::string_view trimmed = Trim(value);
    return trimmed.empty() || options.null_tokens.contains(trimmed);
  };

  std::vector<Cell> flat;
  std::vector<std::size_t> row_widths;
  std::size_t max_width = header_fields.size();
  while ((!options.max_rows || row_widths.size() < *options.max_rows) &&
         parser.NextRecord(fields)) {
    for (std::string& f : fields) {
      if (is_missing(f)) {
        flat.emplace_back(std::nullopt);
      } else {
        flat.emplace_back(std::move(f));
      }
    }
    row_widths.push_back(fields.size());
    max_width = std::max(max_width, fields.size());
  }
  if (row_widths.empty()) {
    throw EmptyTableError(source_name + ": table has no data rows");
  }

  const std::size_t width = max_width;
  std::size_t ragged = 0;
  for (std::size_t w : row_widths) ragged += (w != width) ? 1 : 0;
  if (ragged > 0) {
    std::vector<Cell> padded;
    padded.reserve(row_widths.size() * width);
    std::size_t offset = 0;
    for (std::size_t w : row_widths) {
      for (std::size_t k = 0; k < w; ++k) {
        padded.push_back(std::move(flat[offset + k]));
      }
      for (std::size_t k = w; k < width; ++k) padded.emplace_back(std::nullopt);
      offset += w;
    }
    flat = std::move(padded);
    warnings.push_back(std::to_string(ragged) +
                       " row(s) had fewer than " + std::to_string(width) +
                       " fields and were padded with missing cells");
  }
  if (options.has_header && header_fields.size() < width) {
    warnings.push_back("header has " + std::to_string(header_fields.size()) +
                       " field(s) but rows have up to " +
                       std::to_string(width) +
                       "; extra columns were given synthetic names");
  }

  std::vector<std::string> headers =
      DisambiguateHeaders(std::move(header_fields), width);
  return RawTable(std::move(source_name), std::move(headers), std::move(flat),
                  std::move(warnings));
}

RawTable ReadCsvFile(const std::filesystem::path& path,
                     const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("error while reading " + path.string());
  }
  return ReadCsv(buffer.view(), options, path.filename().string());
}

std::string_view TypeName(TypeKind kind) {
  switch (kind) {
    case TypeKind::kBoolean:
      return "boolean";
    case TypeKind::kInteger:
      return "integer";
    case TypeKind::kFloat:
      return "float";
    case TypeKind::kString:
      return "string";
  }
  return "string";
}

bool MatchesInteger(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!IsDigit(s[i])) return false;
  }
  return true;
}

bool MatchesFloat(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t int_digits = 0;
  while (i < s.size() && IsDigit(s[i])) {
    ++i;
    ++int_digits;
  }
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && IsDigit(s[i])) {
      ++i;
      ++frac_digits;
    }
  }
  if (int_digits + frac_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < s.size() && IsDigit(s[i])) {
      ++i;
      ++exp_digits;
    }
    if (exp_digits == 0) return false;
  }
  return i == s.size();
}

bool MatchesBoolean(std::string_view s) {
  if (s.empty() || s.size() > 5) return false;
  const std::string folded = CaseFold(s);
  return folded == "true" || folded == "false" || folded == "t" ||
         folded == "f" || folded == "yes" || folded == "no" || folded == "y" ||
         folded == "n";
}

std::optional<double> ParseNumber(std::string_view s) {
  if (!MatchesFloat(s)) return std::nullopt;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec == std::errc::result_out_of_range) {
    // from_chars leaves `value` untouched on overflow/underflow.
    return std::strtod(std::string(s).c_str(), nullptr);
  }
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

namespace {

void Accumulate(const Cell& cell, ParseCounts& counts) {
  if (!cell) return;
  const std::string_view trimmed = Trim(*cell);
  ++counts.non_missing;
  if (MatchesBoolean(trimmed)) ++counts.boolean_like;
  // Integers are a subset of floats; skip the second scan when possible.
  if (MatchesInteger(trimmed)) {
    ++counts.integer_like;
    ++counts.float_like;
  } else if (MatchesFloat(trimmed)) {
    ++counts.float_like;
  }
}

InferredType Resolve(const ParseCounts& counts) {
  InferredType type;
  const std::size_t n = counts.non_missing;
  if (n == 0) {
    type.kind = TypeKind::kString;
  } else if (counts.boolean_like == n) {
    type.kind = TypeKind::kBoolean;
  } else if (counts.integer_like == n) {
    type.kind = TypeKind::kInteger;
  } else if (counts.float_like == n) {
    type.kind = TypeKind::kFloat;
  } else {
    type.kind = TypeKind::kString;
  }
  return type;
}

}  // namespace

ColumnInference InferColumnType(std::span<const Cell> cells) {
  ColumnInference result;
  for (const Cell& cell : cells) Accumulate(cell, result.counts);
  result.type = Resolve(result.counts);
  return result;
}

TypedTable::TypedTable(RawTable raw, std::vector<InferredType> column_types,
                       std::vector<ParseCounts> parse_counts)
    : raw_(std::move(raw)),
      column_types_(std::move(column_types)),
      parse_counts_(std::move(parse_counts)) {}

TypedTable ParseTable(RawTable raw) {
  const std::size_t columns = raw.column_count();
  std::vector<ParseCounts> counts(columns);
  for (std::size_t r = 0; r < raw.row_count(); ++r) {
    const auto row = raw.row(r);
    for (std::size_t c = 0; c < columns; ++c) Accumulate(row[c], counts[c]);
  }
  std::vector<InferredType> types;
  types.reserve(columns);
  for (const ParseCounts& c : counts) types.push_back(Resolve(c));
  return TypedTable(std::move(raw), std::move(types), std::move(counts));
}

}  // namespace smelt
