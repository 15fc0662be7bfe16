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

#include "subharm/analytic.hpp"

#include <cmath>

namespace subharm {

double Observables::uncertainty_product() const { return std::sqrt(var_plus * var_minus); }

namespace analytic {

AtomicSteadyState atomic_steady_state(const ModelParams& p) {
  const double k2 = p.kappa * p.kappa;
  const double e2 = p.epsilon * p.epsilon;
  const double denom = k2 + 4.0 * e2;
  AtomicSteadyState s;
  s.eta_a = 4.0 * e2 / denom;
  s.eta_b = 0.0;
  s.eta_c = k2 / denom;
  s.sigma_c = 2.0 * p.epsilon * p.kappa / denom;
  return s;
}

double mean_photon_number(const ModelParams& p) {
  const double k = p.kappa;
  const double e = p.epsilon;
  const double below = k * k - 4.0 * e * e;
  const double above = k * k + 4.0 * e * e;
  return 2.0 * e * e / below * (2.0 - k * p.gamma_c / above);
}

ModeOccupations mode_occupations(const ModelParams& p) {
  const double k = p.kappa;
  const double e = p.epsilon;
  const double k2 = k * k;
  const double e2 = e * e;
  const double below = k2 - 4.0 * e2;
  const auto atom = atomic_steady_state(p);
  const double coherence_sum = 2.0 * atom.sigma_c;
  // 4 g^2 = kappa * gamma_c
  const double pref = k * p.gamma_c / (k2 * below * below);
  const double base = 2.0 * e2 / below;

  ModeOccupations n;
  n.n_a = base + pref * ((k2 * k2 - 4.0 * e2 * e2) * atom.eta_a +
                         2.0 * e2 * (4.0 * e2 + k2) * atom.eta_b +
                         2.0 * e2 * (k2 - 2.0 * e2) * atom.eta_c -
                         2.0 * e * k * (k2 - 2.0 * e2) * coherence_sum);
  n.n_b = base + pref * (2.0 * e2 * (k2 + 2.0 * e2) * atom.eta_a +
                         (k2 + 4.0 * e2) * (k2 - 2.0 * e2) * atom.eta_b +
                         4.0 * e2 * e2 * atom.eta_c - 4.0 * e2 * e * k * coherence_sum);
  return n;
}

ModeOccupations anti_normal_moments(const ModelParams& p) {
  const double k = p.kappa;
  const double e = p.epsilon;
  const double k2 = k * k;
  const double e2 = e * e;
  const double below = k2 - 4.0 * e2;
  const auto atom = atomic_steady_state(p);
  const double coherence_sum = 2.0 * atom.sigma_c;
  const double pref = k * p.gamma_c / (k2 * below * below);
  const double base = 1.0 + 2.0 * e2 / below;

  ModeOccupations m;
  m.n_a = base + pref * (2.0 * e2 * (k2 + 2.0 * e2) * atom.eta_a +
                         (k2 + 4.0 * e2) * (k2 - 2.0 * e2) * atom.eta_b +
                         4.0 * e2 * e2 * atom.eta_c - 4.0 * e2 * e * k * coherence_sum);
  // eta_c enters with a plus sign; this is what keeps the commutator routes equal.
  m.n_b = base + pref * (4.0 * e2 * (k2 - e2) * atom.eta_a +
                         2.0 * e2 * (4.0 * e2 + k2) * atom.eta_b +
                         (k2 * k2 - 2.0 * e2 * (k2 + 2.0 * e2)) * atom.eta_c -
                         2.0 * e * k * (k2 - 2.0 * e2) * coherence_sum);
  return m;
}

QuadratureVariances quadrature_variances(const ModelParams& p) {
  // In x = eps/kappa the epsilon -> 0 limit is exact: every correction term
  // vanishes identically and the brackets reduce to 1.
  const double x = p.epsilon / p.kappa;
  const double x2 = x * x;
  const double below = 1.0 - 4.0 * x2;
  const double pref = (p.gamma_c / p.kappa) / ((1.0 + 4.0 * x2) * below * below);

  const double plus_bracket = 4.0 * x2 * (8.0 * x2 + 1.0 - 6.0 * x) + (1.0 - 2.0 * x) +
                              4.0 * x * ((1.0 - 4.0 * x) + 4.0 * x2);
  const double minus_bracket = 4.0 * x2 * (8.0 * x2 + 1.0 + 6.0 * x) + (1.0 + 2.0 * x) -
                               4.0 * x * ((1.0 + 4.0 * x) + 4.0 * x2);
  QuadratureVariances v;
  v.var_plus = 2.0 - 4.0 * x / (1.0 + 2.0 * x) + pref * plus_bracket;
  v.var_minus = 2.0 + 4.0 * x / (1.0 - 2.0 * x) + pref * minus_bracket;
  return v;
}

double vacuum_variance(const ModelParams& p) { return 2.0 + p.gamma_c / p.kappa; }

double squeezing(const ModelParams& p) {
  const double vacuum = vacuum_variance(p);
  return (vacuum - quadrature_variances(p).var_plus) / vacuum;
}

double commutator_expectation(const ModelParams& p) {
  const double k = p.kappa;
  return 2.0 + k * p.gamma_c / (k * k + 4.0 * p.epsilon * p.epsilon);
}

double uncertainty_bound(const ModelParams& p) { return std::abs(commutator_expectation(p)); }

Observables observables(const ModelParams& p) {
  Observables o;
  o.mean_photon = mean_photon_number(p);
  const auto v = quadrature_variances(p);
  o.var_plus = v.var_plus;
  o.var_minus = v.var_minus;
  o.vacuum_variance = vacuum_variance(p);
  o.squeezing = (o.vacuum_variance - v.var_plus) / o.vacuum_variance;
  o.commutator = commutator_expectation(p);
  const auto n = mode_occupations(p);
  const auto m = anti_normal_moments(p);
  o.commutator_from_moments = (m.n_a + m.n_b) - (n.n_a + n.n_b);
  return o;
}

}  // namespace analytic
}  // namespace subharm
