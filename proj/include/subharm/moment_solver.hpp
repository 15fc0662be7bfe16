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

// Numerical route to the steady state: the stationary atomic equations and
// the ten stationary field second-moment equations are assembled as real
// linear systems and solved by dense LU. This is the independent check on
// the hand-reduced closed forms in analytic.hpp.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "subharm/model.hpp"
#include "subharm/numerics/dense.hpp"
#include "subharm/observables.hpp"

namespace subharm::moments {

using cplx = std::complex<double>;

enum class MomentErrc {
  SingularSystem,
  InconsistentInputs,
};

class MomentSolverError : public std::runtime_error {
 public:
  MomentSolverError(MomentErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  [[nodiscard]] MomentErrc code() const noexcept { return code_; }

 private:
  MomentErrc code_;
};

struct AtomicMoments {
  cplx sigma_a{};  ///< <|b><a|>
  cplx sigma_b{};  ///< <|c><b|>
  cplx sigma_c{};  ///< <|c><a|>
  double eta_a = 0.0;
  double eta_b = 0.0;
  double eta_c = 1.0;
  /// Set when epsilon = 0: the stationary conditions do not fix the state and
  /// the unpumped bottom-level solution was selected.
  bool degenerate_pump = false;
};

struct FieldMoments {
  double n_a = 0.0;     ///< <a^dag a>
  double anti_a = 1.0;  ///< <a a^dag>
  double n_b = 0.0;     ///< <b^dag b>
  double anti_b = 1.0;  ///< <b b^dag>
  cplx ab{};            ///< <a b>
  cplx ba{};            ///< <b a>
  cplx adag_b{};        ///< <a^dag b>
  cplx b_adag{};        ///< <b a^dag>
  cplx a_sq{};          ///< <a^2>
  cplx b_sq{};          ///< <b^2>
};

/// Unknown ordering of the field system: each complex moment contributes its
/// real then imaginary part.
inline constexpr std::array<const char*, 10> kFieldMomentNames = {
    "adag_a", "a_adag", "bdag_b", "b_bdag", "ab", "ba", "adag_b", "b_adag", "a_sq", "b_sq"};

inline constexpr std::array<const char*, 9> kAtomicUnknownNames = {
    "re_sigma_a", "im_sigma_a", "re_sigma_b", "im_sigma_b", "re_sigma_c",
    "im_sigma_c", "eta_a",      "eta_b",      "eta_c"};

struct LinearSystem {
  numerics::DenseMatrix matrix;
  numerics::ComplexVector rhs;
  std::vector<std::string> labels;

  /// ||A x - b||_inf
  [[nodiscard]] double residual(std::span<const cplx> x) const;
};

/// Stationary atomic equations with completeness replacing the redundant
/// population row. Each row is the bracket of its rate equation, i.e. the
/// common stimulated-emission rate is divided out, so gamma_c = 0 yields the
/// gamma_c -> 0+ limit.
LinearSystem assemble_atomic_system(const ModelParams& p);

AtomicMoments solve_atomic_steady_state(const ModelParams& p);

/// 20x20 real system for the ten field moments given the atomic inputs.
LinearSystem assemble_field_system(const ModelParams& p, const AtomicMoments& atoms);

/// Throws SingularSystem when the condition estimate exceeds 1e14.
FieldMoments solve_field_moments(const LinearSystem& sys);

/// Packs moments into the unknown vector layout of assemble_field_system.
numerics::ComplexVector pack(const FieldMoments& m);
FieldMoments unpack_field(std::span<const cplx> x);

/// Mean photon number, quadrature variances and both commutator routes.
/// Throws InconsistentInputs when the routes disagree beyond 1e-10 relative.
Observables observables_from_moments(const FieldMoments& m, const AtomicMoments& atoms,
                                     const ModelParams& p);

/// Full pipeline: atoms, field system, observables.
struct SteadyState {
  AtomicMoments atoms;
  FieldMoments field;
  Observables observables;
  double residual = 0.0;
};

SteadyState solve_steady_state(const ModelParams& p);

}  // namespace subharm::moments
