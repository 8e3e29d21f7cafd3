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

#include "smelt/text.h"

namespace smelt {
namespace {

bool IsAsciiAlnum(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}
bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsLower(char c) { return c >= 'a' && c <= 'z'; }
char Lower(char c) { return IsUpper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

// Shared tokenizer; `keep` decides which non-alphanumeric bytes stay inside a
// token instead of acting as separators.
template <typename KeepFn>
std::vector<std::string> Tokenize(std::string_view name, KeepFn keep) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    if (!IsAsciiAlnum(c) && !keep(c)) {
      flush();
      continue;
    }
    if (IsUpper(c) && i > 0) {
      const char prev = name[i - 1];
      const bool next_lower = i + 1 < name.size() && IsLower(name[i + 1]);
      // fooBar -> foo|Bar ; HTTPStatus -> HTTP|Status
      if (IsLower(prev) || (IsUpper(prev) && next_lower)) flush();
    }
    current.push_back(Lower(c));
  }
  flush();
  return tokens;
}

}  // namespace

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' ||
         c == '\r';
}

std::string_view Trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && IsSpace(s[begin])) ++begin;
  while (end > begin && IsSpace(s[end - 1])) --end;
  return s.substr(begin, end - begin);
}

std::string CaseFold(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = Lower(c);
  return out;
}

std::vector<std::string> NameTokens(std::string_view name) {
  return Tokenize(name, [](char) { return false; });
}

std::string NormalizeName(std::string_view name) {
  std::string out;
  for (const std::string& token : NameTokens(name)) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

std::vector<std::string> UnitSegments(std::string_view name) {
  return Tokenize(name, [](char c) {
    return c == '$' || c == '%' || static_cast<unsigned char>(c) >= 0x80;
  });
}

bool ContainsPhrase(std::string_view normalized_name, std::string_view phrase) {
  if (phrase.empty()) return false;
  std::size_t pos = 0;
  while ((pos = normalized_name.find(phrase, pos)) != std::string_view::npos) {
    const std::size_t end = pos + phrase.size();
    const bool left_ok = pos == 0 || normalized_name[pos - 1] == ' ';
    const bool right_ok =
        end == normalized_name.size() || normalized_name[end] == ' ';
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

}  // namespace smelt
