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

// Shape classification of string cells that carry numbers.

#ifndef SMELT_PATTERNS_H_
#define SMELT_PATTERNS_H_

#include <array>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "smelt/ingest.h"

namespace smelt {

enum class StrPattern {
  kVersion,       // 1.1.9
  kNumWithUnit,   // 90 min, $12, 45%
  kFormattedNum,  // 1,234,567.5
  kPureNum,       // 12.5
  kOther,
};

inline constexpr std::size_t kStrPatternCount = 5;

std::string_view StrPatternName(StrPattern pattern);  // "VERSION", ...

struct PatternMatch {
  StrPattern pattern = StrPattern::kOther;
  // Set for kNumWithUnit: case-folded, trailing 's' stripped ("Seasons" ->
  // "season"); the symbol itself for currency and percent forms.
  std::string unit;
};

// `cell` must already be trimmed.
PatternMatch ClassifyString(std::string_view cell);

struct PatternCensus {
  std::array<std::size_t, kStrPatternCount> counts{};
  std::set<std::string> unit_words;

  std::size_t count(StrPattern p) const {
    return counts[static_cast<std::size_t>(p)];
  }
  // VERSION + NUM_WITH_UNIT + FORMATTED_NUM + PURE_NUM.
  std::size_t numeric_like() const;
  std::size_t total() const;
  // Highest-count class among the four numeric ones; ties resolve in
  // declaration order.
  StrPattern dominant_numeric() const;

  void Add(std::string_view trimmed_cell);

  friend bool operator==(const PatternCensus&, const PatternCensus&) = default;
};

PatternCensus DetectStrPatterns(std::span<const Cell> cells);

}  // namespace smelt

#endif  // SMELT_PATTERNS_H_
