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

#include <string>
#include <utility>
#include <vector>

#include "subharm/lindblad/evolve.hpp"

namespace subharm::lindblad {

/// d<L>/dt = sum_k c_k <R_k> + constant, indices into the operator list.
struct MomentEquation {
  std::string name;
  std::size_t lhs = 0;
  std::vector<std::pair<cplx, std::size_t>> rhs;
  cplx constant{};
};

struct MomentEquationSet {
  std::vector<TrackedOperator> operators;
  std::vector<MomentEquation> equations;
};

/// The exact first- and second-order cavity moment equations and the atomic
/// moment equations implied by the master equation.
MomentEquationSet exact_moment_equations(const OperatorSet& ops, const ModelParams& p, double g);

struct ResidualEntry {
  std::string name;
  double max_residual = 0.0;
};

struct ResidualReport {
  double spacing = 0.0;
  std::size_t samples = 0;
  std::vector<ResidualEntry> entries;

  [[nodiscard]] double max() const;
};

/// Centered finite differences of each left side against the right side at
/// interior samples. Uses every `stride`-th sample of the uniform prefix of
/// the trajectory; needs at least three. Trajectory columns must follow
/// `set.operators`.
ResidualReport moment_residuals(const Trajectory& traj, const MomentEquationSet& set,
                                std::size_t stride = 1);

}  // namespace subharm::lindblad
