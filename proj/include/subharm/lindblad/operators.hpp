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

#include "subharm/model.hpp"
#include "subharm/numerics/dense.hpp"
#include "subharm/numerics/sparse.hpp"

namespace subharm::lindblad {

using numerics::cplx;
using numerics::DenseMatrix;
using numerics::SparseOperator;

enum class LindbladErrc {
  InvalidConfig,
  SymmetryBroken,
};

class LindbladError : public std::invalid_argument {
 public:
  LindbladError(LindbladErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  [[nodiscard]] LindbladErrc code() const noexcept { return code_; }

 private:
  LindbladErrc code_;
};

/// Atomic basis order: top, intermediate, bottom.
enum Level : std::size_t { kLevelA = 0, kLevelB = 1, kLevelC = 2 };

/// Truncated joint space atom (x) mode a (x) mode b, each mode keeping
/// Fock states |0>..|N-1>.
struct HilbertConfig {
  std::size_t fock_cutoff = 8;

  static constexpr std::size_t atom_dim = 3;

  [[nodiscard]] std::size_t dim() const noexcept {
    return atom_dim * fock_cutoff * fock_cutoff;
  }
  [[nodiscard]] std::size_t index(std::size_t level, std::size_t na, std::size_t nb) const noexcept {
    return (level * fock_cutoff + na) * fock_cutoff + nb;
  }
  [[nodiscard]] std::size_t level_of(std::size_t i) const noexcept {
    return i / (fock_cutoff * fock_cutoff);
  }
  [[nodiscard]] std::size_t na_of(std::size_t i) const noexcept {
    return (i / fock_cutoff) % fock_cutoff;
  }
  [[nodiscard]] std::size_t nb_of(std::size_t i) const noexcept { return i % fock_cutoff; }
};

/// Throws InvalidConfig unless N >= 2.
HilbertConfig validate_config(const HilbertConfig& cfg);

struct OperatorSet {
  HilbertConfig cfg;
  SparseOperator a;
  SparseOperator b;
  SparseOperator sigma_a;  ///< |b><a|
  SparseOperator sigma_b;  ///< |c><b|
  SparseOperator sigma_c;  ///< |c><a|
  SparseOperator eta_a;    ///< |a><a|
  SparseOperator eta_b;
  SparseOperator eta_c;
  SparseOperator identity;
};

OperatorSet build_operator_set(const HilbertConfig& cfg);

/// H = i eps (ab - a^dag b^dag) + i g (sigma_a^dag a - a^dag sigma_a + sigma_b^dag b - b^dag sigma_b)
SparseOperator build_hamiltonian(const OperatorSet& ops, const ModelParams& p, double g);

/// Dense joint-space state.
class DensityOperator {
 public:
  DensityOperator() = default;
  explicit DensityOperator(DenseMatrix m);

  /// |i><i| for basis index i.
  static DensityOperator basis_state(const HilbertConfig& cfg, std::size_t i);
  /// |c><c| (x) |0><0| (x) |0><0|
  static DensityOperator initial_state(const HilbertConfig& cfg);

  [[nodiscard]] std::size_t dim() const noexcept { return m_.rows(); }
  [[nodiscard]] const DenseMatrix& matrix() const noexcept { return m_; }
  [[nodiscard]] DenseMatrix& matrix() noexcept { return m_; }

  [[nodiscard]] cplx trace() const;
  /// max |rho_ij - conj(rho_ji)|
  [[nodiscard]] double hermiticity_defect() const;
  [[nodiscard]] double min_eigenvalue() const;

 private:
  DenseMatrix m_;
};

/// Right-hand side of the master equation on a general (not necessarily
/// Hermitian) dense operator.
DensityOperator lindblad_rhs(const DensityOperator& rho, const SparseOperator& h,
                             const OperatorSet& ops, double kappa);

/// Tr(rho O). Throws DimensionMismatch.
cplx expectation(const DensityOperator& rho, const SparseOperator& o);

/// O rho with O sparse.
DenseMatrix left_multiply(const SparseOperator& o, const DenseMatrix& rho);

}  // namespace subharm::lindblad
