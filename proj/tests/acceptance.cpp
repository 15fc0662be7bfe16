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

// Acceptance run: one PASS/FAIL line per criterion, full detail for
// failures. Criterion 7 drives the built CLI as a subprocess.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "subharm/csv.hpp"
#include "subharm/verification.hpp"

namespace fs = std::filesystem;
using namespace subharm::verification;

namespace {

std::string run_cli(const std::string& args) {
  const auto dir = fs::temp_directory_path() / ("subharm_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto out = dir / "out.csv";
  fs::remove(out);
  const std::string cmd = std::string("'") + SUBHARM_CLI_PATH + "' " + args + " --out '" +
                          out.string() + "' 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream is(out, std::ios::binary);
  std::ostringstream ss;
  ss << "exit " << status << '\n' << is.rdbuf();
  return ss.str();
}

std::string describe(const Check& c) {
  using subharm::csv::format_number;
  std::string s = c.name + " = " + format_number(c.measured) + " (need " + c.relation + " ";
  if (c.relation == "in") {
    s += "[" + format_number(c.bound) + ", " + format_number(c.upper) + "]";
  } else {
    s += format_number(c.bound);
  }
  return s + ")";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> cli_runs = {
      {"figure2", [] { return run_cli("figure2"); }},
      {"figure3", [] { return run_cli("figure3"); }},
      {"figure4", [] { return run_cli("figure4"); }},
      {"sweep", [] { return run_cli("sweep"); }},
      {"sweep --epsilon 0.3", [] { return run_cli("sweep --epsilon 0.3"); }},
      {"simulate", [] {
         return run_cli("simulate --epsilon 0.2 --gamma-c 0.1 --fock-cutoff 4 --t-max 5");
       }},
  };

  std::vector<CriterionResult> results;
  results.push_back(double_entry_steady_state());
  results.push_back(reduction_identities());
  results.push_back(point_checks());
  results.push_back(closed_form_claims());
  results.push_back(exact_ode_oracle());
  results.push_back(simulation_vs_theory());
  results.push_back(determinism(cli_runs));

  bool all = true;
  for (const auto& r : results) {
    const auto* h = r.headline();
    std::cout << (r.pass() ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title;
    if (h != nullptr) std::cout << " | " << (r.pass() ? "worst " : "first failure ") << describe(*h);
    std::cout << '\n';
    all = all && r.pass();
  }
  for (const auto& r : results) {
    if (r.pass()) continue;
    std::cout << "\ncriterion " << r.id << " detail:\n";
    for (const auto& c : r.checks) {
      std::cout << (c.pass ? "  ok   " : "  FAIL ") << describe(c) << "  " << c.detail << '\n';
    }
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
