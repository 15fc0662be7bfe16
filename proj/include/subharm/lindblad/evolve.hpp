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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "subharm/lindblad/operators.hpp"
#include "subharm/observables.hpp"

namespace subharm::lindblad {

enum class EvolveStatus {
  Converged,
  NotConverged,        ///< t_max reached with ||d rho/dt||max >= tol
  TruncationOverflow,  ///< top Fock level population above kTruncationLimit
};

const char* to_string(EvolveStatus s);

inline constexpr double kTruncationLimit = 1e-4;

struct EvolveOptions {
  double t_max = 400.0;
  double sample_every = 0.5;
  double tol = 1e-7;
  /// Zero selects 0.01 / max(kappa, g, epsilon).
  double dt = 0.0;
  /// Stop at the first sample where ||d rho/dt||max < tol.
  bool stop_early = true;
  /// Positivity is checked at roughly this many evenly spread samples, at
  /// every power-of-two sample index, and at the final state.
  std::size_t positivity_checks = 10;
};

double default_time_step(const ModelParams& p);

struct TrackedOperator {
  std::string label;
  SparseOperator op;
};

/// Expectation values of the tracked operators at each sample.
struct Trajectory {
  std::vector<std::string> labels;
  std::vector<double> times;
  std::vector<std::vector<cplx>> values;  ///< values[sample][label]
};

struct EvolveResult {
  EvolveStatus status = EvolveStatus::NotConverged;
  DensityOperator state;
  double t_final = 0.0;
  double derivative_norm = 0.0;  ///< ||d rho/dt||max at t_final
  double max_trace_drift = 0.0;
  double min_eigenvalue = 0.0;   ///< smallest over checked samples
  std::size_t positivity_samples = 0;
  double max_top_population = 0.0;
  Trajectory trajectory;
};

/// Integrates from |c><c| (x) |0><0| (x) |0><0| with fixed-step RK4.
EvolveResult evolve_to_steady_state(const HilbertConfig& cfg, const ModelParams& p,
                                    const EvolveOptions& opts,
                                    const std::vector<TrackedOperator>& track = {});

/// Moments tracked in trajectory dumps: the ten field moments followed by
/// the three atomic populations.
std::vector<TrackedOperator> standard_tracked_moments(const OperatorSet& ops);

/// Columns t, then re_/im_ of every tracked label.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

struct SimulatedObservables {
  /// Bosonic values: vacuum_variance is 2 and both commutator fields hold
  /// <c c^dag> - <c^dag c> as measured.
  Observables bosonic;
  cplx mean_a{};
  cplx mean_b{};
  double commutator_a = 1.0;  ///< <a a^dag> - <a^dag a>
  double commutator_b = 1.0;
  double eta_a = 0.0;
  double eta_b = 0.0;
  double eta_c = 1.0;
  double top_population = 0.0;
};

/// Quadrature variances include first-moment subtraction.
SimulatedObservables simulated_observables(const DensityOperator& rho, const OperatorSet& ops);

struct CutoffRun {
  std::size_t cutoff = 0;
  EvolveStatus status = EvolveStatus::NotConverged;
  double t_final = 0.0;
  SimulatedObservables observables;
};

struct ConvergenceReport {
  std::vector<CutoffRun> runs;
  /// changes[i]: largest absolute change in (n, var_plus, var_minus) between
  /// runs i and i+1; NaN when either run did not converge cleanly.
  std::vector<double> changes;
  bool converged = false;
  /// The finer cutoff of the first pair whose change is below threshold.
  std::size_t converged_cutoff = 0;

  [[nodiscard]] const CutoffRun* selected() const;
};

/// Reruns the evolution per cutoff. Runs that overflow or fail to converge
/// are recorded with their status and excluded from the comparison.
ConvergenceReport convergence_check(const ModelParams& p, std::span<const std::size_t> cutoffs,
                                    const EvolveOptions& opts, double threshold = 1e-4);

}  // namespace subharm::lindblad
