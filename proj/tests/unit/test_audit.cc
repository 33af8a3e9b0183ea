// Copyright 2026 The paramtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paramtomo/audit.h"

#include <set>
#include <string>

#include "gtest/gtest.h"

namespace paramtomo {
namespace {

TEST(AuditTest, AllChecksPass) {
  std::vector<AuditCheck> checks = RunAudit();
  EXPECT_EQ(checks.size(), 16u);
  for (const AuditCheck& c : checks) EXPECT_TRUE(c.passed) << c.id << ": " << c.detail;
  EXPECT_TRUE(AllPassed(checks));
  std::set<std::string> ids;
  for (const AuditCheck& c : checks) ids.insert(c.id);
  EXPECT_EQ(ids.size(), checks.size());
}

TEST(AuditTest, CorruptionIsDetected) {
  AuditOptions opt;
  opt.inject_corruption = true;
  std::vector<AuditCheck> checks = RunAudit(opt);
  EXPECT_FALSE(AllPassed(checks));
  for (const AuditCheck& c : checks) {
    EXPECT_EQ(c.passed, c.id != "recovery.budget_decomposition") << c.id;
  }
}

TEST(AuditTest, LedgerJson) {
  std::string json = AuditLedgerJson(RunAudit());
  EXPECT_NE(json.find("\"paramtomo.audit\""), std::string::npos);
  EXPECT_NE(json.find("\"passed\": true"), std::string::npos);
}

}  // namespace
}  // namespace paramtomo
