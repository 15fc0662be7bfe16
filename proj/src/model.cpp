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

#include "subharm/model.hpp"

#include <cmath>
#include <sstream>

namespace subharm {

namespace {

std::string describe(const ModelParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(epsilon=" << p.epsilon << ", kappa=" << p.kappa << ", gamma_c=" << p.gamma_c << ")";
  return os.str();
}

}  // namespace

double SweepGrid::at(std::size_t i) const {
  if (steps < 2) return epsilon_min;
  if (i + 1 == steps) return epsilon_max;
  const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
  return epsilon_min + t * (epsilon_max - epsilon_min);
}

ModelParams validate_params(const ModelParams& p) {
  if (!std::isfinite(p.kappa) || !(p.kappa > 0.0)) {
    throw ModelError(ModelErrc::NonPositiveRate, "kappa must be positive " + describe(p));
  }
  if (!std::isfinite(p.gamma_c) || p.gamma_c < 0.0) {
    throw ModelError(ModelErrc::NegativeCoupling, "gamma_c must be non-negative " + describe(p));
  }
  if (!std::isfinite(p.epsilon) || p.epsilon < 0.0) {
    throw ModelError(ModelErrc::StabilityViolation, "epsilon must be non-negative " + describe(p));
  }
  if (!(p.epsilon < 0.5 * p.kappa)) {
    throw ModelError(ModelErrc::StabilityViolation,
                     "epsilon must stay below kappa/2 " + describe(p));
  }
  return p;
}

SweepGrid validate_grid(const SweepGrid& grid, double kappa) {
  if (grid.steps < 2) {
    throw ModelError(ModelErrc::InvalidGrid, "sweep needs at least two steps");
  }
  if (!(grid.epsilon_min <= grid.epsilon_max)) {
    throw ModelError(ModelErrc::InvalidGrid, "sweep requires eps-min <= eps-max");
  }
  validate_params({grid.epsilon_min, kappa, 0.0});
  validate_params({grid.epsilon_max, kappa, 0.0});
  return grid;
}

double coupling_from_gamma_c(double kappa, double gamma_c) {
  if (!(kappa > 0.0)) {
    throw ModelError(ModelErrc::NonPositiveRate, "kappa must be positive");
  }
  if (gamma_c < 0.0) {
    throw ModelError(ModelErrc::NegativeCoupling, "gamma_c must be non-negative");
  }
  return std::sqrt(gamma_c * kappa / 4.0);
}

double gamma_c_from_coupling(double kappa, double g) {
  if (!(kappa > 0.0)) {
    throw ModelError(ModelErrc::NonPositiveRate, "kappa must be positive");
  }
  return 4.0 * g * g / kappa;
}

}  // namespace subharm
