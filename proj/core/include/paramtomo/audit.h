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

#ifndef PARAMTOMO_AUDIT_H_
#define PARAMTOMO_AUDIT_H_

#include <cstdint>
#include <string>
#include <vector>

namespace paramtomo {

struct AuditCheck {
  std::string id;  // e.g. "rip.spillover"
  std::string description;
  bool passed = false;
  std::string detail;
};

struct AuditOptions {
  uint64_t seed = 0;
  // Adds a perturbation to a recovered coefficient in the budget fixture so
  // that the budget-decomposition check must fail (negative control).
  bool inject_corruption = false;
};

// Runs the property checks of every module at small sizes. Each check is
// self-contained; an exception inside a check marks it failed.
std::vector<AuditCheck> RunAudit(const AuditOptions& options = {});

bool AllPassed(const std::vector<AuditCheck>& checks);

// {"format": "paramtomo.audit", "version": 1, "passed": bool,
//  "checks": [{"id", "description", "passed", "detail"}, ...]}
std::string AuditLedgerJson(const std::vector<AuditCheck>& checks);

}  // namespace paramtomo

#endif  // PARAMTOMO_AUDIT_H_
