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

#include "subharm/lindblad/operators.hpp"

#include <string>

namespace subharm::lindblad {

namespace {

constexpr cplx kI{0.0, 1.0};

SparseOperator on_atom(const SparseOperator& atomic, std::size_t n) {
  const auto id = SparseOperator::identity(n);
  return kron(kron(atomic, id), id);
}

}  // namespace

HilbertConfig validate_config(const HilbertConfig& cfg) {
  if (cfg.fock_cutoff < 2) {
    throw LindbladError(LindbladErrc::InvalidConfig,
                        "fock cutoff must be at least 2, got " + std::to_string(cfg.fock_cutoff));
  }
  return cfg;
}

OperatorSet build_operator_set(const HilbertConfig& cfg) {
  validate_config(cfg);
  const std::size_t n = cfg.fock_cutoff;
  const auto id_atom = SparseOperator::identity(HilbertConfig::atom_dim);
  const auto id_mode = SparseOperator::identity(n);
  const auto lower = SparseOperator::annihilation(n);
  constexpr std::size_t d3 = HilbertConfig::atom_dim;

  OperatorSet ops;
  ops.cfg = cfg;
  ops.a = kron(kron(id_atom, lower), id_mode);
  ops.b = kron(kron(id_atom, id_mode), lower);
  ops.sigma_a = on_atom(SparseOperator::transition(d3, kLevelB, kLevelA), n);
  ops.sigma_b = on_atom(SparseOperator::transition(d3, kLevelC, kLevelB), n);
  ops.sigma_c = on_atom(SparseOperator::transition(d3, kLevelC, kLevelA), n);
  ops.eta_a = on_atom(SparseOperator::transition(d3, kLevelA, kLevelA), n);
  ops.eta_b = on_atom(SparseOperator::transition(d3, kLevelB, kLevelB), n);
  ops.eta_c = on_atom(SparseOperator::transition(d3, kLevelC, kLevelC), n);
  ops.identity = SparseOperator::identity(cfg.dim());
  return ops;
}

SparseOperator build_hamiltonian(const OperatorSet& ops, const ModelParams& p, double g) {
  const auto ad = ops.a.adjoint();
  const auto bd = ops.b.adjoint();
  const auto pump = ops.a * ops.b - ad * bd;
  const auto exchange = ops.sigma_a.adjoint() * ops.a - ad * ops.sigma_a +
                        ops.sigma_b.adjoint() * ops.b - bd * ops.sigma_b;
  return (kI * p.epsilon) * pump + (kI * g) * exchange;
}

}  // namespace subharm::lindblad
