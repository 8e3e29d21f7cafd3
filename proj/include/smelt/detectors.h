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

// One detector per smell. Every detector is a pure function of the profile
// and the config; RunAll adds enable switches, suppression and ordering.

#ifndef SMELT_DETECTORS_H_
#define SMELT_DETECTORS_H_

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "smelt/config.h"
#include "smelt/finding.h"
#include "smelt/profile.h"

namespace smelt {

using Findings = std::vector<Finding>;

Findings DetectRedCorr(const TableProfile& profile, const ScanConfig& config);
Findings DetectRedUid(const TableProfile& profile, const ScanConfig& config);
Findings DetectRedDup(const TableProfile& profile, const ScanConfig& config);
Findings DetectCatHierarchy(const TableProfile& profile,
                            const ScanConfig& config);
Findings DetectCatBin(const TableProfile& profile, const ScanConfig& config);
Findings DetectMiscUnit(const TableProfile& profile, const ScanConfig& config);
Findings DetectMiscBalance(const TableProfile& profile,
                           const ScanConfig& config);
Findings DetectMiscSensitive(const TableProfile& profile,
                             const ScanConfig& config);
// Column findings skip columns where the miss-bin condition holds.
Findings DetectMissNull(const TableProfile& profile, const ScanConfig& config);
Findings DetectMissSpVal(const TableProfile& profile, const ScanConfig& config);
Findings DetectMissBin(const TableProfile& profile, const ScanConfig& config);
// Skips columns where the str-human condition holds.
Findings DetectStrNum(const TableProfile& profile, const ScanConfig& config);
Findings DetectStrSanitise(const TableProfile& profile,
                           const ScanConfig& config);
Findings DetectStrHuman(const TableProfile& profile, const ScanConfig& config);

// Columns red-uid would report with high confidence; these are left out of
// the duplicate-row key.
std::set<std::size_t> HighConfidenceUidColumns(
    std::span<const ColumnProfile> columns, const ScanConfig& config);

// Runs every enabled detector, applies severity overrides, then sorts by
// catalogue position, first column, second column. Suppression lives in the
// detectors themselves, so disabling miss-bin or str-human does not bring
// the suppressed findings back.
Findings RunAll(const TableProfile& profile, const ScanConfig& config);

// Strict weak ordering used by RunAll. Table-level findings sort before
// column findings of the same smell.
bool FindingOrder(const Finding& a, const Finding& b);

}  // namespace smelt

#endif  // SMELT_DETECTORS_H_
