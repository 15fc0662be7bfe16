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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "subharm/lindblad/sector_engine.hpp"
#include "subharm/numerics/kernels.hpp"

namespace subharm::lindblad {

SectorLayout::SectorLayout(const HilbertConfig& cfg) : cfg_(validate_config(cfg)) {
  const std::size_t n = cfg_.fock_cutoff;
  const std::size_t d = cfg_.dim();
  sector_.resize(d);
  local_.resize(d);
  members_.resize(2 * n);
  for (std::size_t i = 0; i < d; ++i) {
    const auto s = static_cast<std::size_t>(charge(i) + static_cast<int>(n));
    sector_[i] = s;
    local_[i] = members_[s].size();
    members_[s].push_back(i);
  }
  offset_.assign(members_.size() + 1, 0);
  for (std::size_t s = 0; s < members_.size(); ++s) {
    offset_[s + 1] = offset_[s] + members_[s].size() * members_[s].size();
    max_size_ = std::max(max_size_, members_[s].size());
  }
}

int SectorLayout::charge(std::size_t i) const noexcept {
  return static_cast<int>(cfg_.na_of(i)) - static_cast<int>(cfg_.nb_of(i)) -
         (cfg_.level_of(i) == kLevelB ? 1 : 0);
}

BlockOperator split_by_sector(const SectorLayout& layout, const SparseOperator& op) {
  BlockOperator out;
  out.by_input_sector.resize(layout.sector_count());
  bool first = true;
  for (const auto& e : op.entries()) {
    const int shift = layout.charge(e.row) - layout.charge(e.col);
    if (first) {
      out.shift = shift;
      first = false;
    } else if (shift != out.shift) {
      throw LindbladError(LindbladErrc::SymmetryBroken,
                          "operator mixes charge shifts " + std::to_string(out.shift) + " and " +
                              std::to_string(shift));
    }
    out.by_input_sector[layout.sector_of(e.col)].push_back(
        {layout.local_of(e.row), layout.local_of(e.col), e.value});
  }
  return out;
}

cplx SectorObservable::operator()(std::span<const cplx> state) const {
  cplx acc{};
  for (std::size_t k = 0; k < positions.size(); ++k) acc += values[k] * state[positions[k]];
  return acc;
}

SectorEngine::SectorEngine(const OperatorSet& ops, const SparseOperator& h, double kappa)
    : layout_(ops.cfg), kappa_(kappa) {
  const auto number = ops.a.adjoint() * ops.a + ops.b.adjoint() * ops.b;
  const auto gen = cplx{0.0, -1.0} * (h + cplx{0.0, -0.5 * kappa} * number);
  gen_ = split_by_sector(layout_, gen);
  a_ = split_by_sector(layout_, ops.a);
  b_ = split_by_sector(layout_, ops.b);
  if (gen.nnz() != 0 && gen_.shift != 0) {
    throw LindbladError(LindbladErrc::SymmetryBroken, "Hamiltonian does not conserve charge");
  }
  const auto& cfg = layout_.config();
  for (std::size_t i = 0; i < cfg.dim(); ++i) {
    if (cfg.na_of(i) + 1 == cfg.fock_cutoff) top_a_.push_back(i);
    if (cfg.nb_of(i) + 1 == cfg.fock_cutoff) top_b_.push_back(i);
  }
  const std::size_t m = layout_.max_size();
  m_.resize(m * m);
  y_.resize(m * m);
  yd_.resize(m * m);
}

void SectorEngine::rhs(std::span<const cplx> rho, std::span<cplx> drho) const {
  const auto& k = kernels::active_kernels();
  const std::size_t count = layout_.sector_count();
  const double half_kappa = 0.5 * kappa_;

  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t d = layout_.size(s);
    const cplx* rs = rho.data() + layout_.offset(s);
    cplx* m = m_.data();
    std::fill_n(m, d * d, cplx{});
    for (const auto& e : gen_.by_input_sector[s]) {
      k.caxpy(d, e.value, rs + e.in_local * d, m + e.out_local * d);
    }

    // M += kappa/2 x (x rho_src)^dag, with rho_src the block feeding sector s.
    for (const BlockOperator* x : {&a_, &b_}) {
      const auto src_signed = static_cast<long>(s) - x->shift;
      if (src_signed < 0 || src_signed >= static_cast<long>(count)) continue;
      const auto src = static_cast<std::size_t>(src_signed);
      const auto& entries = x->by_input_sector[src];
      if (entries.empty()) continue;
      const std::size_t ds = layout_.size(src);
      const cplx* rsrc = rho.data() + layout_.offset(src);
      cplx* y = y_.data();
      cplx* yd = yd_.data();
      std::fill_n(y, d * ds, cplx{});
      for (const auto& e : entries) k.caxpy(ds, e.value, rsrc + e.in_local * ds, y + e.out_local * ds);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < ds; ++j) yd[j * d + i] = std::conj(y[i * ds + j]);
      }
      for (const auto& e : entries) {
        k.caxpy(d, half_kappa * e.value, yd + e.in_local * d, m + e.out_local * d);
      }
    }

    cplx* out = drho.data() + layout_.offset(s);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        const cplx v = m[i * d + j] + std::conj(m[j * d + i]);
        out[i * d + j] = v;
        out[j * d + i] = std::conj(v);
      }
    }
  }
}

ComplexVector SectorEngine::pack(const DensityOperator& rho) const {
  const auto& cfg = layout_.config();
  if (rho.dim() != cfg.dim()) {
    throw numerics::NumericsError(numerics::NumericsErrc::DimensionMismatch,
                                  "pack: state dimension " + std::to_string(rho.dim()));
  }
  ComplexVector state(layout_.state_size());
  for (std::size_t i = 0; i < cfg.dim(); ++i) {
    for (std::size_t j = 0; j < cfg.dim(); ++j) {
      const cplx v = rho.matrix()(i, j);
      const std::size_t s = layout_.sector_of(i);
      if (s != layout_.sector_of(j)) {
        if (v != cplx{}) {
          throw LindbladError(LindbladErrc::SymmetryBroken,
                              "state has coherence between charge sectors");
        }
        continue;
      }
      const std::size_t d = layout_.size(s);
      state[layout_.offset(s) + layout_.local_of(i) * d + layout_.local_of(j)] = v;
    }
  }
  return state;
}

DensityOperator SectorEngine::unpack(std::span<const cplx> state) const {
  const auto& cfg = layout_.config();
  DenseMatrix m(cfg.dim(), cfg.dim());
  for (std::size_t s = 0; s < layout_.sector_count(); ++s) {
    const auto idx = layout_.members(s);
    const std::size_t d = idx.size();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m(idx[i], idx[j]) = state[layout_.offset(s) + i * d + j];
    }
  }
  return DensityOperator(std::move(m));
}

SectorObservable SectorEngine::observable(const SparseOperator& o) const {
  SectorObservable obs;
  for (const auto& e : o.entries()) {
    const std::size_t s = layout_.sector_of(e.row);
    if (s != layout_.sector_of(e.col)) continue;
    const std::size_t d = layout_.size(s);
    // Tr(rho O) pairs O_ij with rho_ji
    obs.positions.push_back(layout_.offset(s) + layout_.local_of(e.col) * d +
                            layout_.local_of(e.row));
    obs.values.push_back(e.value);
  }
  return obs;
}

cplx SectorEngine::trace(std::span<const cplx> state) const {
  cplx t{};
  for (std::size_t s = 0; s < layout_.sector_count(); ++s) {
    const std::size_t d = layout_.size(s);
    for (std::size_t i = 0; i < d; ++i) t += state[layout_.offset(s) + i * d + i];
  }
  return t;
}

double SectorEngine::min_eigenvalue(std::span<const cplx> state) const {
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < layout_.sector_count(); ++s) {
    const std::size_t d = layout_.size(s);
    DenseMatrix block(d, d);
    std::copy_n(state.data() + layout_.offset(s), d * d, block.data().data());
    lo = std::min(lo, numerics::min_eigenvalue_hermitian(block));
  }
  return lo;
}

double SectorEngine::top_population(std::span<const cplx> state) const {
  auto population = [&](const std::vector<std::size_t>& idx) {
    double p = 0.0;
    for (const std::size_t i : idx) {
      const std::size_t s = layout_.sector_of(i);
      const std::size_t d = layout_.size(s);
      const std::size_t l = layout_.local_of(i);
      p += state[layout_.offset(s) + l * d + l].real();
    }
    return p;
  };
  return std::max(population(top_a_), population(top_b_));
}

}  // namespace subharm::lindblad
