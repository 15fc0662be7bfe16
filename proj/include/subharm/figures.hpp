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

// CSV generators behind the command-line front end. Each writer validates
// its inputs, evaluates the closed forms over the grid in order and emits a
// header line followed by one row per grid point.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "subharm/lindblad/evolve.hpp"
#include "subharm/model.hpp"

namespace subharm::figures {

inline constexpr double kDefaultKappa = 0.8;
inline constexpr double kDefaultGammaC = 0.5;
inline const std::vector<double> kDefaultFigure2Family = {0.0, 0.25, 0.5};
inline constexpr SweepGrid kDefaultGrid{0.0, 0.35, 50};

/// epsilon, then mean photon number per gamma_c.
void write_figure2(std::ostream& os, double kappa, const std::vector<double>& gamma_c,
                   const SweepGrid& grid);

/// epsilon, var_plus, var_minus, vacuum_level.
void write_figure3(std::ostream& os, double kappa, double gamma_c, const SweepGrid& grid);

/// epsilon, S_interacting, S_bare.
void write_figure4(std::ostream& os, double kappa, double gamma_c, const SweepGrid& grid);

/// Every closed-form observable per grid point.
void write_sweep(std::ostream& os, double kappa, double gamma_c, const SweepGrid& grid);

/// Same columns as write_sweep for a single parameter point.
void write_point(std::ostream& os, const ModelParams& p);

/// Formulas evaluated by a figure command, one per line.
std::string formulas_used(const std::string& command);

struct SimulationSummary {
  lindblad::EvolveResult run;
  lindblad::SimulatedObservables simulated;
  Observables analytic;
  double residual_max = 0.0;
  std::string residual_worst;
};

/// Runs the master equation, writes the trajectory CSV to `csv_out` and a
/// human-readable comparison to `summary_out`.
SimulationSummary run_simulate(const ModelParams& p, std::size_t fock_cutoff,
                               const lindblad::EvolveOptions& opts, std::ostream& csv_out,
                               std::ostream& summary_out);

}  // namespace subharm::figures
