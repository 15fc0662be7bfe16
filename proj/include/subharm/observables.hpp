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

namespace subharm {

/// Steady-state statistics of the superposed mode c = a + b.
///
/// `commutator` is <[c, c^dag]> in the noise-ordered convention of the
/// closed-form theory: 2 + kappa*gamma_c*(eta_c - eta_a)/(kappa^2 - 4 eps^2).
/// `commutator_from_moments` is <c c^dag> - <c^dag c> built from the second
/// moments; the two agree whenever the moments came from the same closure.
struct Observables {
  double mean_photon = 0.0;
  double var_plus = 0.0;
  double var_minus = 0.0;
  double vacuum_variance = 2.0;
  double squeezing = 0.0;
  double commutator = 2.0;
  double commutator_from_moments = 2.0;

  [[nodiscard]] double uncertainty_product() const;
};

}  // namespace subharm
