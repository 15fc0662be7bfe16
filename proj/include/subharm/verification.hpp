// Copyright 2026 The subharm Authors
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

#pragma once

// Acceptance suites shared by `subharm verify` and the acceptance test
// binary. Each suite returns its individual checks with the measured value
// and the tolerance it was held to.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace subharm::verification {

struct Check {
  std::string name;
  double measured = 0.0;
  /// Comparison applied to `measured`: "<", "<=", ">", ">=", "==" against
  /// `bound`, or "in" for the closed range [bound, upper].
  std::string relation = "<";
  double bound = 0.0;
  double upper = 0.0;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;

  [[nodiscard]] bool pass() const;
  /// Name of the first failing check, or the worst check when all pass.
  [[nodiscard]] const Check* headline() const;
};

CriterionResult double_entry_steady_state();
CriterionResult reduction_identities();
CriterionResult point_checks();
CriterionResult closed_form_claims();
CriterionResult exact_ode_oracle();
CriterionResult simulation_vs_theory();

/// Produces the same artifact twice and compares the bytes. Each producer
/// entry is (label, generator).
CriterionResult determinism(
    const std::vector<std::pair<std::string, std::function<std::string()>>>& producers);

/// The in-process CSV producers used by `verify`.
std::vector<std::pair<std::string, std::function<std::string()>>> cli_producers();

/// Full human-readable report: every check with tolerance and value.
void print_report(std::ostream& os, const std::vector<CriterionResult>& results);

/// One line per criterion.
void print_summary(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace subharm::verification
