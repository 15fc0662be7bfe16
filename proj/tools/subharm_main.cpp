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

// subharm: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical failure (no convergence, singular system, non-finite state).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "subharm/figures.hpp"
#include "subharm/lindblad.hpp"
#include "subharm/moment_solver.hpp"
#include "subharm/numerics/error.hpp"
#include "subharm/verification.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Flags {
  double kappa = subharm::figures::kDefaultKappa;
  std::vector<double> gamma_c;
  double eps_min = subharm::figures::kDefaultGrid.epsilon_min;
  double eps_max = subharm::figures::kDefaultGrid.epsilon_max;
  std::size_t steps = subharm::figures::kDefaultGrid.steps;
  std::optional<double> epsilon;
  std::size_t fock_cutoff = 10;
  double t_max = 400.0;
  double dt = 0.0;
  double tol = 1e-7;
  double sample_every = 0.05;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_grid(CLI::App* cmd, Flags& f) {
  cmd->add_option("--kappa", f.kappa, "cavity damping rate")->capture_default_str();
  cmd->add_option("--eps-min", f.eps_min, "first pump rate")->capture_default_str();
  cmd->add_option("--eps-max", f.eps_max, "last pump rate")->capture_default_str();
  cmd->add_option("--steps", f.steps, "number of grid points")->capture_default_str();
  cmd->add_option("--out", f.out, "output CSV path (default: stdout)");
}

double single_gamma(const Flags& f) {
  if (f.gamma_c.size() > 1) throw UsageError("--gamma-c given more than once");
  return f.gamma_c.empty() ? subharm::figures::kDefaultGammaC : f.gamma_c.front();
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream os(f.out, std::ios::binary | std::ios::trunc);
  if (!os) throw UsageError("cannot open output file " + f.out);
  os << text;
  if (!os.flush()) throw UsageError("failed writing " + f.out);
}

subharm::SweepGrid grid_of(const Flags& f) { return {f.eps_min, f.eps_max, f.steps}; }

int run(const std::string& command, const Flags& f) {
  using namespace subharm;
  std::ostringstream os;
  if (command == "figure2") {
    const auto family = f.gamma_c.empty() ? figures::kDefaultFigure2Family : f.gamma_c;
    figures::write_figure2(os, f.kappa, family, grid_of(f));
  } else if (command == "figure3") {
    figures::write_figure3(os, f.kappa, single_gamma(f), grid_of(f));
  } else if (command == "figure4") {
    figures::write_figure4(os, f.kappa, single_gamma(f), grid_of(f));
  } else if (command == "sweep") {
    if (f.epsilon) {
      figures::write_point(os, {*f.epsilon, f.kappa, single_gamma(f)});
    } else {
      figures::write_sweep(os, f.kappa, single_gamma(f), grid_of(f));
    }
  } else if (command == "simulate") {
    lindblad::EvolveOptions opts;
    opts.t_max = f.t_max;
    opts.dt = f.dt;
    opts.tol = f.tol;
    opts.sample_every = f.sample_every;
    const ModelParams p{f.epsilon.value_or(0.2), f.kappa,
                        f.gamma_c.empty() ? 0.0 : single_gamma(f)};
    const auto summary = figures::run_simulate(p, f.fock_cutoff, opts, os, std::cerr);
    emit(f, os.str());
    return summary.run.status == lindblad::EvolveStatus::Converged ? 0 : kExitNumerical;
  } else if (command == "verify") {
    std::vector<verification::CriterionResult> results;
    results.push_back(verification::double_entry_steady_state());
    results.push_back(verification::reduction_identities());
    results.push_back(verification::point_checks());
    results.push_back(verification::closed_form_claims());
    results.push_back(verification::exact_ode_oracle());
    results.push_back(verification::simulation_vs_theory());
    results.push_back(verification::determinism(verification::cli_producers()));
    verification::print_report(os, results);
    os << '\n';
    verification::print_summary(os, results);
    emit(f, os.str());
    for (const auto& r : results) {
      if (!r.pass()) return kExitVerifyFailed;
    }
    return 0;
  }
  std::cerr << figures::formulas_used(command);
  emit(f, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state observables of two subharmonic cavity modes coupled to a cascade "
               "three-level atom, with a master-equation cross-check."};
  app.require_subcommand(1, 1);
  Flags f;

  auto* fig2 = app.add_subcommand("figure2", "mean photon number vs pump rate, one column per gamma_c");
  add_grid(fig2, f);
  fig2->add_option("--gamma-c", f.gamma_c, "stimulated emission decay constant (repeatable)");

  auto* fig3 = app.add_subcommand("figure3", "plus and minus quadrature variances vs pump rate");
  auto* fig4 = app.add_subcommand("figure4", "quadrature squeezing with and without the atom");
  auto* sweep = app.add_subcommand("sweep", "all closed-form observables over a grid or at one point");
  for (auto* cmd : {fig3, fig4, sweep}) {
    add_grid(cmd, f);
    cmd->add_option("--gamma-c", f.gamma_c, "stimulated emission decay constant")
        ->expected(1);
  }
  sweep->add_option("--epsilon", f.epsilon, "evaluate a single pump rate instead of the grid");

  auto* sim = app.add_subcommand("simulate", "master-equation run compared with the closed forms");
  sim->add_option("--epsilon", f.epsilon, "pump rate (default 0.2)");
  sim->add_option("--kappa", f.kappa, "cavity damping rate")->capture_default_str();
  sim->add_option("--gamma-c", f.gamma_c, "stimulated emission decay constant (default 0)")
      ->expected(1);
  sim->add_option("--fock-cutoff", f.fock_cutoff, "Fock states kept per mode")->capture_default_str();
  sim->add_option("--t-max", f.t_max, "integration horizon")->capture_default_str();
  sim->add_option("--dt", f.dt, "RK4 step (default 0.01 / max(kappa, g, epsilon))");
  sim->add_option("--tol", f.tol, "stop once ||drho/dt||max falls below this")->capture_default_str();
  sim->add_option("--sample-every", f.sample_every, "trajectory sampling interval")
      ->capture_default_str();
  sim->add_option("--out", f.out, "trajectory CSV path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "run every acceptance suite and report");
  verify->add_option("--out", f.out, "report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const subharm::ModelError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const subharm::lindblad::LindbladError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const subharm::moments::MomentSolverError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const subharm::numerics::NumericsError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}
