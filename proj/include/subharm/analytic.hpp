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

// Closed-form steady state of the two subharmonic modes coupled to a
// cascade three-level atom, in the large-time closure. Every function
// expects parameters that already passed validate_params.

#include "subharm/model.hpp"
#include "subharm/observables.hpp"

namespace subharm::analytic {

struct AtomicSteadyState {
  double eta_a = 0.0;  ///< top level population
  double eta_b = 0.0;  ///< intermediate level population
  double eta_c = 1.0;  ///< bottom level population
  double sigma_c = 0.0;  ///< two-photon coherence <|c><a|>, real at steady state
};

struct QuadratureVariances {
  double var_plus = 0.0;
  double var_minus = 0.0;
};

struct ModeOccupations {
  double n_a = 0.0;
  double n_b = 0.0;
};

AtomicSteadyState atomic_steady_state(const ModelParams& p);

/// Total photon number of c = a + b.
double mean_photon_number(const ModelParams& p);

/// <a^dag a>, <b^dag b> with the atomic steady state substituted.
ModeOccupations mode_occupations(const ModelParams& p);

/// <a a^dag>, <b b^dag>. The b-mode eta_c term enters with a plus sign,
/// which makes <c c^dag> - <c^dag c> equal commutator_expectation.
ModeOccupations anti_normal_moments(const ModelParams& p);

QuadratureVariances quadrature_variances(const ModelParams& p);

/// Variance of either quadrature at epsilon = 0: 2 + gamma_c / kappa.
double vacuum_variance(const ModelParams& p);

/// Fractional reduction of the plus-quadrature variance below the vacuum level.
double squeezing(const ModelParams& p);

/// <[c, c^dag]> at the atomic steady state: 2 + kappa*gamma_c/(kappa^2 + 4 eps^2).
double commutator_expectation(const ModelParams& p);

/// Lower bound on the product of quadrature uncertainties.
double uncertainty_bound(const ModelParams& p);

/// All of the above bundled.
Observables observables(const ModelParams& p);

}  // namespace subharm::analytic
