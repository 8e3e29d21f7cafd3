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

#include "smelt/patterns.h"

#include "smelt/text.h"

namespace smelt {
namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::size_t SkipDigits(std::string_view s, std::size_t i) {
  while (i < s.size() && IsDigit(s[i])) ++i;
  return i;
}

bool IsVersion(std::string_view s) {
  std::size_t i = SkipDigits(s, 0);
  if (i == 0) return false;
  int dotted_parts = 0;
  while (i < s.size()) {
    if (s[i] != '.') return false;
    const std::size_t next = SkipDigits(s, i + 1);
    if (next == i + 1) return false;
    i = next;
    ++dotted_parts;
  }
  return dotted_parts >= 1;
}

// [+-]? d{1,3} (, d{3})+ (. d+)?
bool IsThousandsGrouped(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  const std::size_t lead_end = SkipDigits(s, i);
  const std::size_t lead = lead_end - i;
  if (lead < 1 || lead > 3) return false;
  i = lead_end;
  int groups = 0;
  while (i < s.size() && s[i] == ',') {
    const std::size_t end = SkipDigits(s, i + 1);
    if (end - (i + 1) != 3) return false;
    i = end;
    ++groups;
  }
  if (groups == 0) return false;
  if (i < s.size() && s[i] == '.') {
    const std::size_t end = SkipDigits(s, i + 1);
    if (end == i + 1) return false;
    i = end;
  }
  return i == s.size();
}

// A bare or thousands-grouped decimal number.
bool IsNumberToken(std::string_view s) {
  return MatchesFloat(s) || IsThousandsGrouped(s);
}

std::string Singularize(std::string word) {
  if (word.size() > 1 && word.back() == 's') word.pop_back();
  return word;
}

constexpr std::string_view kCurrencySymbols[] = {
    "$", "\xE2\x82\xAC" /* euro */, "\xC2\xA3" /* pound */,
    "\xC2\xA5" /* yen */};

bool MatchNumWithUnit(std::string_view s, std::string& unit) {
  // number <whitespace> word
  const std::size_t last_space = s.find_last_of(" \t");
  if (last_space != std::string_view::npos) {
    const std::string_view number = Trim(s.substr(0, last_space));
    const std::string_view word = s.substr(last_space + 1);
    bool alpha = !word.empty();
    for (char c : word) alpha = alpha && IsAlpha(c);
    if (alpha && IsNumberToken(number) &&
        number.find_first_of(" \t") == std::string_view::npos) {
      unit = Singularize(CaseFold(word));
      return true;
    }
  }
  // number %
  if (s.size() > 1 && s.back() == '%') {
    if (IsNumberToken(Trim(s.substr(0, s.size() - 1)))) {
      unit = "%";
      return true;
    }
  }
  // [sign] currency number
  std::string_view rest = s;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    rest.remove_prefix(1);
  }
  for (std::string_view symbol : kCurrencySymbols) {
    if (rest.starts_with(symbol)) {
      const std::string_view number = Trim(rest.substr(symbol.size()));
      if (!number.empty() && number.front() != '-' && number.front() != '+' &&
          IsNumberToken(number)) {
        unit = std::string(symbol);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string_view StrPatternName(StrPattern pattern) {
  switch (pattern) {
    case StrPattern::kVersion:
      return "VERSION";
    case StrPattern::kNumWithUnit:
      return "NUM_WITH_UNIT";
    case StrPattern::kFormattedNum:
      return "FORMATTED_NUM";
    case StrPattern::kPureNum:
      return "PURE_NUM";
    case StrPattern::kOther:
      return "OTHER";
  }
  return "OTHER";
}

PatternMatch ClassifyString(std::string_view cell) {
  PatternMatch match;
  if (IsVersion(cell)) {
    match.pattern = StrPattern::kVersion;
  } else if (MatchNumWithUnit(cell, match.unit)) {
    match.pattern = StrPattern::kNumWithUnit;
  } else if (IsThousandsGrouped(cell)) {
    match.pattern = StrPattern::kFormattedNum;
  } else if (MatchesFloat(cell)) {
    match.pattern = StrPattern::kPureNum;
  } else {
    match.pattern = StrPattern::kOther;
  }
  return match;
}

std::size_t PatternCensus::numeric_like() const {
  return count(StrPattern::kVersion) + count(StrPattern::kNumWithUnit) +
         count(StrPattern::kFormattedNum) + count(StrPattern::kPureNum);
}

std::size_t PatternCensus::total() const {
  return numeric_like() + count(StrPattern::kOther);
}

StrPattern PatternCensus::dominant_numeric() const {
  StrPattern best = StrPattern::kVersion;
  for (StrPattern p : {StrPattern::kNumWithUnit, StrPattern::kFormattedNum,
                       StrPattern::kPureNum}) {
    if (count(p) > count(best)) best = p;
  }
  return best;
}

void PatternCensus::Add(std::string_view trimmed_cell) {
  PatternMatch match = ClassifyString(trimmed_cell);
  ++counts[static_cast<std::size_t>(match.pattern)];
  if (match.pattern == StrPattern::kNumWithUnit) {
    unit_words.insert(std::move(match.unit));
  }
}

PatternCensus DetectStrPatterns(std::span<const Cell> cells) {
  PatternCensus census;
  for (const Cell& cell : cells) {
    if (cell) census.Add(Trim(*cell));
  }
  return census;
}

}  // namespace smelt
