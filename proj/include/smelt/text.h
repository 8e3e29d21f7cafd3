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

#ifndef SMELT_TEXT_H_
#define SMELT_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace smelt {

// ASCII whitespace: space, \t, \n, \v, \f, \r.
bool IsSpace(char c);

std::string_view Trim(std::string_view s);

// ASCII-only lower-casing; bytes >= 0x80 pass through unchanged.
std::string CaseFold(std::string_view s);

// Splits a column name into lower-cased word tokens. Any byte that is not an
// ASCII letter or digit separates tokens, and camelCase boundaries split too
// ("hostId" -> {"host", "id"}, "HTTPStatus" -> {"http", "status"}).
std::vector<std::string> NameTokens(std::string_view name);

// NameTokens joined by single spaces: "Native_Country" -> "native country".
std::string NormalizeName(std::string_view name);

// Like NameTokens, but keeps non-ASCII bytes and the symbols '$', '%' inside
// tokens so unit markers such as "°C" or "($)" survive as "°c" and "$".
std::vector<std::string> UnitSegments(std::string_view name);

// True when `phrase` (already normalized, space separated) occurs as a run of
// whole tokens inside the normalized `name`.
bool ContainsPhrase(std::string_view normalized_name, std::string_view phrase);

}  // namespace smelt

#endif  // SMELT_TEXT_H_
