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

#include <gtest/gtest.h>

namespace smelt {
namespace {

TEST(TrimTest, StripsAsciiWhitespaceOnly) {
  EXPECT_EQ(Trim("  a b \t\r\n"), "a b");
  EXPECT_EQ(Trim(""), "");
  EXPECT_EQ(Trim("   "), "");
  EXPECT_EQ(Trim("\xC2\xA0x"), "\xC2\xA0x");
}

TEST(CaseFoldTest, LowersAsciiAndKeepsOtherBytes) {
  EXPECT_EQ(CaseFold("Yes"), "yes");
  EXPECT_EQ(CaseFold("\xC3\x89T\xC3\x89"), "\xC3\x89t\xC3\x89");
}

TEST(NameTokensTest, SplitsOnSeparatorsAndCamelCase) {
  EXPECT_EQ(NormalizeName("native-country"), "native country");
  EXPECT_EQ(NormalizeName("MaritalStatus"), "marital status");
  EXPECT_EQ(NormalizeName("HTTPStatus_code"), "http status code");
  EXPECT_EQ(NormalizeName("  __ "), "");
  EXPECT_EQ(NormalizeName("radius2"), "radius2");
}

TEST(UnitSegmentsTest, KeepsCurrencyPercentAndNonAscii) {
  EXPECT_EQ(UnitSegments("price_$"), (std::vector<std::string>{"price", "$"}));
  EXPECT_EQ(UnitSegments("temp (\xC2\xB0" "C)"),
            (std::vector<std::string>{"temp", "\xC2\xB0" "c"}));
  EXPECT_EQ(UnitSegments("growth%"), (std::vector<std::string>{"growth%"}));
}

TEST(ContainsPhraseTest, MatchesWholeTokensOnly) {
  EXPECT_TRUE(ContainsPhrase("native country", "native country"));
  EXPECT_TRUE(ContainsPhrase("applicant age", "age"));
  EXPECT_FALSE(ContainsPhrase("page count", "age"));
  EXPECT_FALSE(ContainsPhrase("usage", "age"));
  EXPECT_FALSE(ContainsPhrase("age", ""));
}

}  // namespace
}  // namespace smelt
