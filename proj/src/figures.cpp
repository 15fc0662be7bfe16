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

#include "subharm/figures.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "subharm/analytic.hpp"
#include "subharm/csv.hpp"
#include "subharm/lindblad/residuals.hpp"

namespace subharm::figures {

namespace {

using csv::format_number;

ModelParams at(double kappa, double gamma_c, double epsilon) {
  return validate_params({epsilon, kappa, gamma_c});
}

lindblad::Trajectory select_columns(const lindblad::Trajectory& traj,
                          const std::vector<lindblad::TrackedOperator>& wanted) {
  lindblad::Trajectory out;
  std::vector<std::size_t> cols;
  for (const auto& w : wanted) {
    const auto it = std::find(traj.labels.begin(), traj.labels.end(), w.label);
    if (it == traj.labels.end()) continue;
    cols.push_back(static_cast<std::size_t>(it - traj.labels.begin()));
    out.labels.push_back(w.label);
  }
  out.times = traj.times;
  for (const auto& row : traj.values) {
    auto& r = out.values.emplace_back();
    for (const std::size_t c : cols) r.push_back(row[c]);
  }
  return out;
}

void line(std::ostream& os, const std::string& name, double simulated, double closed_form) {
  os << "  " << name << ": simulated " << format_number(simulated) << ", closed form "
     << format_number(closed_form) << '\n';
}

}  // namespace

void write_figure2(std::ostream& os, double kappa, const std::vector<double>& gamma_c,
                   const SweepGrid& grid) {
  validate_grid(grid, kappa);
  std::vector<std::string> header{"epsilon"};
  for (const double g : gamma_c) header.push_back("n_gamma_c=" + format_number(g));
  csv::Writer w(os);
  w.header(header);
  std::vector<double> row(header.size());
  for (std::size_t i = 0; i < grid.steps; ++i) {
    const double e = grid.at(i);
    row[0] = e;
    for (std::size_t j = 0; j < gamma_c.size(); ++j) {
      row[j + 1] = analytic::mean_photon_number(at(kappa, gamma_c[j], e));
    }
    w.row(row);
  }
}

void write_figure3(std::ostream& os, double kappa, double gamma_c, const SweepGrid& grid) {
  validate_grid(grid, kappa);
  csv::Writer w(os);
  w.header({"epsilon", "var_plus", "var_minus", "vacuum_level"});
  for (std::size_t i = 0; i < grid.steps; ++i) {
    const auto p = at(kappa, gamma_c, grid.at(i));
    const auto v = analytic::quadrature_variances(p);
    const double row[] = {p.epsilon, v.var_plus, v.var_minus, analytic::vacuum_variance(p)};
    w.row(row);
  }
}

void write_figure4(std::ostream& os, double kappa, double gamma_c, const SweepGrid& grid) {
  validate_grid(grid, kappa);
  csv::Writer w(os);
  w.header({"epsilon", "S_interacting", "S_bare"});
  for (std::size_t i = 0; i < grid.steps; ++i) {
    const auto p = at(kappa, gamma_c, grid.at(i));
    const double row[] = {p.epsilon, analytic::squeezing(p),
                          analytic::squeezing(at(kappa, 0.0, p.epsilon))};
    w.row(row);
  }
}

namespace {

const std::vector<std::string> kSweepColumns = {
    "epsilon",   "n_a",        "n_b",        "mean_photon",       "var_plus",
    "var_minus", "vacuum_level", "squeezing", "commutator", "uncertainty_bound",
    "eta_a",     "eta_c",      "sigma_c"};

void sweep_row(csv::Writer& w, const ModelParams& p) {
  const auto o = analytic::observables(p);
  const auto n = analytic::mode_occupations(p);
  const auto s = analytic::atomic_steady_state(p);
  const double row[] = {p.epsilon,       n.n_a,       n.n_b,        o.mean_photon,
                        o.var_plus,      o.var_minus, o.vacuum_variance, o.squeezing,
                        o.commutator,    analytic::uncertainty_bound(p), s.eta_a,
                        s.eta_c,         s.sigma_c};
  w.row(row);
}

}  // namespace

void write_sweep(std::ostream& os, double kappa, double gamma_c, const SweepGrid& grid) {
  validate_grid(grid, kappa);
  csv::Writer w(os);
  w.header(kSweepColumns);
  for (std::size_t i = 0; i < grid.steps; ++i) sweep_row(w, at(kappa, gamma_c, grid.at(i)));
}

void write_point(std::ostream& os, const ModelParams& p) {
  csv::Writer w(os);
  w.header(kSweepColumns);
  sweep_row(w, validate_params(p));
}

std::string formulas_used(const std::string& command) {
  const std::string atoms =
      "atomic steady state: eta_a = 4 eps^2/(k^2+4 eps^2), eta_b = 0, "
      "eta_c = k^2/(k^2+4 eps^2), sigma_c = 2 eps k/(k^2+4 eps^2)\n";
  const std::string occupations =
      "mode occupations: <a^dag a>, <b^dag b> closed forms in eps, k, gamma_c with the "
      "atomic steady state substituted\n"
      "mean photon number: n = <a^dag a> + <b^dag b>\n"
      "no atom (gamma_c = 0): n = 4 eps^2/(k^2 - 4 eps^2)\n";
  const std::string variances =
      "quadrature variances: var_pm = n + <a a^dag> + <b b^dag> pm 2 Re(<ab> + <ba>)\n"
      "vacuum level: 2 + gamma_c/k\n";
  const std::string squeeze =
      "squeezing: S = (vacuum level - var_plus)/vacuum level\n"
      "no atom (gamma_c = 0): S = 2 eps/(k + 2 eps)\n";
  if (command == "figure2") return atoms + occupations;
  if (command == "figure3") return atoms + occupations + variances;
  if (command == "figure4") return atoms + occupations + variances + squeeze;
  if (command == "sweep") {
    return atoms + occupations + variances + squeeze +
           "commutator: <[c, c^dag]> = 2 + k gamma_c (eta_c - eta_a)/(k^2 - 4 eps^2)\n";
  }
  return {};
}

SimulationSummary run_simulate(const ModelParams& p, std::size_t fock_cutoff,
                               const lindblad::EvolveOptions& opts, std::ostream& csv_out,
                               std::ostream& summary_out) {
  validate_params(p);
  const double g = coupling_from_gamma_c(p.kappa, p.gamma_c);
  const lindblad::HilbertConfig cfg{fock_cutoff};
  const auto ops = lindblad::build_operator_set(cfg);
  const auto equations = lindblad::exact_moment_equations(ops, p, g);

  SimulationSummary s;
  s.run = lindblad::evolve_to_steady_state(cfg, p, opts, equations.operators);
  s.simulated = lindblad::simulated_observables(s.run.state, ops);
  s.analytic = analytic::observables(p);
  const auto report = lindblad::moment_residuals(s.run.trajectory, equations);
  for (const auto& e : report.entries) {
    if (e.max_residual >= s.residual_max) {
      s.residual_max = e.max_residual;
      s.residual_worst = e.name;
    }
  }

  lindblad::write_trajectory_csv(
      csv_out, select_columns(s.run.trajectory, lindblad::standard_tracked_moments(ops)));

  const auto& sim = s.simulated.bosonic;
  const auto& th = s.analytic;
  auto& os = summary_out;
  os << "status: " << lindblad::to_string(s.run.status) << " at t=" << format_number(s.run.t_final)
     << " (||drho/dt||max " << format_number(s.run.derivative_norm) << ", tol "
     << format_number(opts.tol) << ")\n";
  os << "fock cutoff " << fock_cutoff << ", top level population "
     << format_number(s.run.max_top_population) << '\n';
  os << "observables:\n";
  line(os, "mean photon number", sim.mean_photon, th.mean_photon);
  line(os, "var_plus", sim.var_plus, th.var_plus);
  line(os, "var_minus", sim.var_minus, th.var_minus);
  line(os, "squeezing", sim.squeezing, th.squeezing);
  os << "  relative gap in mean photon number: "
     << format_number(th.mean_photon == 0.0
                          ? std::abs(sim.mean_photon)
                          : std::abs(sim.mean_photon - th.mean_photon) / th.mean_photon)
     << '\n';
  os << "operator-ordering convention (closed form vs bosonic simulation):\n";
  line(os, "vacuum level", sim.vacuum_variance, th.vacuum_variance);
  line(os, "<c c^dag> - <c^dag c>", sim.commutator, th.commutator);
  os << "  per mode <x x^dag> - <x^dag x>: a " << format_number(s.simulated.commutator_a) << ", b "
     << format_number(s.simulated.commutator_b) << '\n';
  os << "first moments: |<a>| " << format_number(std::abs(s.simulated.mean_a)) << ", |<b>| "
     << format_number(std::abs(s.simulated.mean_b)) << '\n';
  os << "atomic populations: eta_a " << format_number(s.simulated.eta_a) << ", eta_b "
     << format_number(s.simulated.eta_b) << ", eta_c " << format_number(s.simulated.eta_c) << '\n';
  os << "state checks: trace drift " << format_number(s.run.max_trace_drift)
     << ", min eigenvalue " << format_number(s.run.min_eigenvalue) << " over "
     << s.run.positivity_samples << " samples\n";
  os << "exact moment equations: max residual " << format_number(s.residual_max) << " ("
     << s.residual_worst << "), sample spacing " << format_number(report.spacing) << '\n';
  return s;
}

}  // namespace subharm::figures
