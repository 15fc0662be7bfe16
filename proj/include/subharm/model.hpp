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
#include <stdexcept>
#include <string>

namespace subharm {

/// Rates that parameterize the cavity/atom model. All three share one
/// arbitrary inverse-time unit.
struct ModelParams {
  double epsilon = 0.0;  ///< pump-conversion rate of the parametric term
  double kappa = 1.0;    ///< cavity damping rate (same for both modes)
  double gamma_c = 0.0;  ///< stimulated emission decay constant, 4 g^2 / kappa
};

/// Abscissa of the figure sweeps: `steps` evenly spaced pump rates.
struct SweepGrid {
  double epsilon_min = 0.0;
  double epsilon_max = 0.0;
  std::size_t steps = 2;

  [[nodiscard]] double at(std::size_t i) const;
};

enum class ModelErrc {
  StabilityViolation,
  NonPositiveRate,
  NegativeCoupling,
  InvalidGrid,
};

class ModelError : public std::invalid_argument {
 public:
  ModelError(ModelErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  [[nodiscard]] ModelErrc code() const noexcept { return code_; }

 private:
  ModelErrc code_;
};

/// Returns `p` unchanged when kappa > 0, 0 <= epsilon < kappa/2 and
/// gamma_c >= 0; throws ModelError otherwise. The threshold itself is
/// excluded, nothing below it is.
ModelParams validate_params(const ModelParams& p);

/// Checks ordering, step count and that both ends lie below threshold.
SweepGrid validate_grid(const SweepGrid& grid, double kappa);

/// Atom-field coupling g such that gamma_c = 4 g^2 / kappa.
double coupling_from_gamma_c(double kappa, double gamma_c);

/// Inverse of coupling_from_gamma_c.
double gamma_c_from_coupling(double kappa, double g);

}  // namespace subharm
