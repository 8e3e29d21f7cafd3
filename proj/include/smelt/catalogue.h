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

// The fixed registry of the fourteen data smells.

#ifndef SMELT_CATALOGUE_H_
#define SMELT_CATALOGUE_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "smelt/finding.h"

namespace smelt {

struct SmellDescriptor {
  std::string_view key;
  std::string_view name;
  Group group;
  std::string_view description;
  std::string_view rationale;
  std::string_view mitigation;
  Severity default_severity;
  Confidence default_confidence;

  std::string_view group_key() const { return GroupKey(group); }
  std::string_view group_name() const { return GroupName(group); }
};

// All 14 descriptors, grouped red, cat, misc, miss, str.
std::span<const SmellDescriptor> ListSmells();

// Throws UnknownSmellError (listing the valid keys) for an unknown key.
const SmellDescriptor& Describe(std::string_view key);

bool IsKnownSmell(std::string_view key);

// Position of `key` in ListSmells(); the sort key for findings.
std::size_t CatalogueRank(std::string_view key);

nlohmann::json CatalogueToJson();

// Plain text listing for `smelt list`.
std::string RenderCatalogueText();

// Markdown page; docs/smells.md is generated from this.
std::string RenderCatalogueMarkdown();

}  // namespace smelt

#endif  // SMELT_CATALOGUE_H_
