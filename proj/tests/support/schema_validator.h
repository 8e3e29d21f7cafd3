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

// Validator for the JSON-schema subset used by the shipped report schema:
// type, enum, const, minimum, maximum, required, properties,
// additionalProperties, items, oneOf and local $ref into $defs.

#ifndef SMELT_TESTS_SUPPORT_SCHEMA_VALIDATOR_H_
#define SMELT_TESTS_SUPPORT_SCHEMA_VALIDATOR_H_

#include <string>
#include <vector>

#include "json.hpp"

namespace smelt::testing {

class SchemaValidator {
 public:
  explicit SchemaValidator(nlohmann::json schema);

  // Returns one message per violation; empty means valid.
  std::vector<std::string> Validate(const nlohmann::json& instance) const;

 private:
  void Check(const nlohmann::json& schema, const nlohmann::json& instance,
             const std::string& path, std::vector<std::string>& errors) const;
  const nlohmann::json& Resolve(const std::string& ref) const;

  nlohmann::json root_;
};

}  // namespace smelt::testing

#endif  // SMELT_TESTS_SUPPORT_SCHEMA_VALIDATOR_H_
