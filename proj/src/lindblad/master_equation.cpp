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
#include <string>

#include "subharm/lindblad/operators.hpp"
#include "subharm/numerics/kernels.hpp"

namespace subharm::lindblad {

namespace {

void require_dims(std::size_t rho_dim, std::size_t op_dim, const char* what) {
  if (rho_dim != op_dim) {
    throw numerics::NumericsError(numerics::NumericsErrc::DimensionMismatch,
                                  std::string(what) + ": state dimension " +
                                      std::to_string(rho_dim) + ", operator dimension " +
                                      std::to_string(op_dim));
  }
}

}  // namespace

DensityOperator::DensityOperator(DenseMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw numerics::NumericsError(numerics::NumericsErrc::DimensionMismatch,
                                  "density operator must be square");
  }
}

DensityOperator DensityOperator::basis_state(const HilbertConfig& cfg, std::size_t i) {
  DenseMatrix m(cfg.dim(), cfg.dim());
  m(i, i) = 1.0;
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::initial_state(const HilbertConfig& cfg) {
  return basis_state(cfg, cfg.index(kLevelC, 0, 0));
}

cplx DensityOperator::trace() const {
  cplx t{};
  for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i);
  return t;
}

double DensityOperator::hermiticity_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i; j < dim(); ++j) {
      d = std::max(d, std::abs(m_(i, j) - std::conj(m_(j, i))));
    }
  }
  return d;
}

double DensityOperator::min_eigenvalue() const { return numerics::min_eigenvalue_hermitian(m_); }

DenseMatrix left_multiply(const SparseOperator& o, const DenseMatrix& rho) {
  require_dims(rho.rows(), o.dim(), "left_multiply");
  const auto& k = kernels::active_kernels();
  DenseMatrix out(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < o.dim(); ++i) {
    auto dst = out.row(i);
    for (const auto& e : o.row(i)) k.caxpy(dst.size(), e.value, rho.row(e.col).data(), dst.data());
  }
  return out;
}

// d rho = -i Heff rho + (-i Heff rho^dag)^dag + kappa sum_x x (x rho^dag)^dag,
// with Heff = H - i kappa/2 (a^dag a + b^dag b).
DensityOperator lindblad_rhs(const DensityOperator& rho, const SparseOperator& h,
                             const OperatorSet& ops, double kappa) {
  require_dims(rho.dim(), h.dim(), "lindblad_rhs");
  require_dims(rho.dim(), ops.a.dim(), "lindblad_rhs");
  const cplx minus_i{0.0, -1.0};
  const auto number = ops.a.adjoint() * ops.a + ops.b.adjoint() * ops.b;
  const auto heff = h + cplx{0.0, -0.5 * kappa} * number;
  const auto gen = minus_i * heff;

  const DenseMatrix& r = rho.matrix();
  const DenseMatrix rd = r.adjoint();
  DenseMatrix out = left_multiply(gen, r);
  const DenseMatrix right = left_multiply(gen, rd).adjoint();
  const auto& k = kernels::active_kernels();
  k.caxpy(out.data().size(), 1.0, right.data().data(), out.data().data());

  for (const auto* x : {&ops.a, &ops.b}) {
    const DenseMatrix jump = left_multiply(*x, left_multiply(*x, rd).adjoint());
    k.caxpy(out.data().size(), kappa, jump.data().data(), out.data().data());
  }
  return DensityOperator(std::move(out));
}

cplx expectation(const DensityOperator& rho, const SparseOperator& o) {
  require_dims(rho.dim(), o.dim(), "expectation");
  cplx acc{};
  for (const auto& e : o.entries()) acc += e.value * rho.matrix()(e.col, e.row);
  return acc;
}

}  // namespace subharm::lindblad
