// Copyright 2026 The nhqfi authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Cross-oracle validation battery behind `nhqfi validate`: route agreement,
 * closed-form/engine agreement, Cramer-Rao saturation, condition checks and
 * the golden values {6.25, 16, 4, 36, 4g^2}. Failures are report content,
 * not exceptions.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nhqfi {

struct ValidateOptions {
  /// Multiplies one closed form by (1 + 1e-3); a negative control used to
  /// prove the battery actually bites.
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_passed = false;
};

ValidationReport validate_suite(const ValidateOptions& options = {});

/// One pass/fail line per check, plus a summary line.
void print_report(const ValidationReport& report, std::ostream& os);

}  // namespace nhqfi
