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

#ifndef SMELT_TESTS_SUPPORT_TEST_SUPPORT_H_
#define SMELT_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "smelt/config.h"
#include "smelt/detectors.h"
#include "smelt/ingest.h"
#include "smelt/profile.h"

namespace smelt::testing {

std::filesystem::path FixtureDir();
std::filesystem::path SchemaPath();
std::filesystem::path SmeltBinary();

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view bytes);

struct NamedColumn {
  std::string name;
  std::vector<std::string> cells;
};
// Builds CSV text column-wise; cells are quoted when needed.
std::string CsvFromColumns(const std::vector<NamedColumn>& columns);

// Clean filler columns: two independent floats and a balanced category.
std::vector<NamedColumn> BaseColumns(std::size_t rows, unsigned seed = 7);

TypedTable TableFromCsv(std::string_view csv,
                        const ParseOptions& options = {});
TableProfile ProfileCsv(std::string_view csv, const ScanConfig& config = {});
Findings ScanCsv(std::string_view csv, const ScanConfig& config = {});
Findings ScanFile(const std::filesystem::path& path,
                  const ScanConfig& config = {});

std::set<std::string> KeysOf(const Findings& findings);
Findings Only(const Findings& findings, std::string_view key);

// Runs the smelt binary; stdout and stderr are captured separately.
struct ProcessResult {
  int status = -1;
  std::string out;
  std::string err;
};
ProcessResult RunSmelt(const std::vector<std::string>& args);

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace smelt::testing

#endif  // SMELT_TESTS_SUPPORT_TEST_SUPPORT_H_
