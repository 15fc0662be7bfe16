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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "subharm/numerics/dense.hpp"

namespace subharm::numerics {

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  cplx value{};
};

/// Square sparse operator in coordinate form, normalized once at build time:
/// entries sorted by (row, col), duplicates summed, exact zeros dropped.
/// Row offsets are kept alongside so row traversal is CSR-like.
class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(std::size_t dim);  // zero operator
  SparseOperator(std::size_t dim, std::vector<Triplet> triplets);

  static SparseOperator identity(std::size_t dim);
  static SparseOperator diagonal(std::span<const cplx> diag);
  /// Bosonic lowering operator on Fock states |0>..|n-1>.
  static SparseOperator annihilation(std::size_t n);
  /// |row><col| on a dim-dimensional space.
  static SparseOperator transition(std::size_t dim, std::size_t row, std::size_t col);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t nnz() const noexcept { return entries_.size(); }
  [[nodiscard]] std::span<const Triplet> entries() const noexcept { return entries_; }
  /// Entries of row i.
  [[nodiscard]] std::span<const Triplet> row(std::size_t i) const;
  /// A(i, j), zero when absent.
  [[nodiscard]] cplx at(std::size_t i, std::size_t j) const;

  [[nodiscard]] SparseOperator adjoint() const;
  [[nodiscard]] DenseMatrix to_dense() const;

 private:
  void normalize();

  std::size_t dim_ = 0;
  std::vector<Triplet> entries_;
  std::vector<std::size_t> row_start_;
};

/// Entry (i*B.dim + k, j*B.dim + l) = A(i, j) * B(k, l).
SparseOperator kron(const SparseOperator& a, const SparseOperator& b);

/// y = A x, accumulated row by row in column order.
ComplexVector spmv(const SparseOperator& a, std::span<const cplx> x);

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(cplx s, const SparseOperator& a);

/// Largest |A(i,j) - B(i,j)| over the union of both patterns.
double max_abs_difference(const SparseOperator& a, const SparseOperator& b);

/// max |A - A^dag|.
double hermiticity_defect(const SparseOperator& a);

}  // namespace subharm::numerics
