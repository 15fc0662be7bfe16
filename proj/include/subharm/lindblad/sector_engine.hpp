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

// Block-diagonal master-equation engine.
//
// The charge Q = n_a - n_b - [level == b] commutes with the Hamiltonian, and
// each cavity jump shifts it by one (a: -1, b: +1). A state that starts
// diagonal in Q therefore stays block diagonal, so only the 2N diagonal
// blocks rho_Q are stored and propagated. The blocks are packed row-major in
// one flat vector, ordered by Q from -N to N-1.

#include <cstddef>
#include <span>
#include <vector>

#include "subharm/lindblad/operators.hpp"

namespace subharm::lindblad {

using numerics::ComplexVector;

class SectorLayout {
 public:
  explicit SectorLayout(const HilbertConfig& cfg);

  [[nodiscard]] const HilbertConfig& config() const noexcept { return cfg_; }
  [[nodiscard]] int charge(std::size_t i) const noexcept;
  [[nodiscard]] std::size_t sector_count() const noexcept { return members_.size(); }
  [[nodiscard]] std::size_t sector_of(std::size_t i) const noexcept { return sector_[i]; }
  [[nodiscard]] std::size_t local_of(std::size_t i) const noexcept { return local_[i]; }
  [[nodiscard]] std::size_t size(std::size_t s) const noexcept { return members_[s].size(); }
  [[nodiscard]] std::size_t offset(std::size_t s) const noexcept { return offset_[s]; }
  [[nodiscard]] std::size_t state_size() const noexcept { return offset_.back(); }
  [[nodiscard]] std::size_t max_size() const noexcept { return max_size_; }
  /// Global basis indices of sector s, ascending.
  [[nodiscard]] std::span<const std::size_t> members(std::size_t s) const { return members_[s]; }

 private:
  HilbertConfig cfg_;
  std::vector<std::size_t> sector_;
  std::vector<std::size_t> local_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::size_t> offset_;
  std::size_t max_size_ = 0;
};

struct BlockEntry {
  std::size_t out_local;
  std::size_t in_local;
  cplx value;
};

/// A sparse operator that moves every basis state by the same charge shift,
/// stored per input sector.
struct BlockOperator {
  int shift = 0;
  std::vector<std::vector<BlockEntry>> by_input_sector;
};

/// Throws SymmetryBroken when the operator does not shift charge uniformly.
BlockOperator split_by_sector(const SectorLayout& layout, const SparseOperator& op);

/// Precomputed Tr(rho O) over the packed state; off-block entries of O
/// pair with zeros and are dropped.
struct SectorObservable {
  std::vector<std::size_t> positions;
  std::vector<cplx> values;

  [[nodiscard]] cplx operator()(std::span<const cplx> state) const;
};

class SectorEngine {
 public:
  SectorEngine(const OperatorSet& ops, const SparseOperator& h, double kappa);

  [[nodiscard]] const SectorLayout& layout() const noexcept { return layout_; }

  /// d rho/dt on the packed state. Uses internal scratch: one engine per thread.
  void rhs(std::span<const cplx> rho, std::span<cplx> drho) const;

  /// Throws SymmetryBroken when rho has weight outside the diagonal blocks.
  [[nodiscard]] ComplexVector pack(const DensityOperator& rho) const;
  [[nodiscard]] DensityOperator unpack(std::span<const cplx> state) const;

  [[nodiscard]] SectorObservable observable(const SparseOperator& o) const;

  [[nodiscard]] cplx trace(std::span<const cplx> state) const;
  /// Smallest eigenvalue over all blocks.
  [[nodiscard]] double min_eigenvalue(std::span<const cplx> state) const;
  /// Larger of the two modes' populations of Fock level N-1.
  [[nodiscard]] double top_population(std::span<const cplx> state) const;

 private:
  SectorLayout layout_;
  double kappa_;
  BlockOperator gen_;  // -i (H - i kappa/2 (a^dag a + b^dag b))
  BlockOperator a_;
  BlockOperator b_;
  std::vector<std::size_t> top_a_;
  std::vector<std::size_t> top_b_;
  mutable ComplexVector m_, y_, yd_;
};

}  // namespace subharm::lindblad
